import unittest, os
from fractions import Fraction

from test_advopt.test_case_with_id import TestCaseWithId
from advopt.shifts import Sft, presets
from advopt.scenarios import covering_radius, covering_radius_report
from advopt.exceptions import InvalidInputError

class TestCoveringRadius(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestCoveringRadius, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))

    def test_golden_mean_covers_half(self):

        bracket = covering_radius(presets.golden_mean_shift(), presets.full_shift(), 8, 3)
        self.assertTrue(bracket.contains(Fraction(1, 2)))
        self.assertEqual(bracket.get_lo(), Fraction(1, 2))
        self.assertFalse(bracket.degraded)

        self.test_passed = True

    def test_shift_covers_itself(self):

        golden = presets.golden_mean_shift()
        self.assertEqual(covering_radius(golden, golden, 6, 3).get_lo(), 0)

        report = covering_radius_report("golden_mean:golden_mean", 6, 3)
        self.assertTrue(report.overall())

        self.test_passed = True

    def test_disjoint_symbols(self):

        letters = Sft(["a", "b"], [("a", "b"), ("b", "a")], "ab")
        with self.assertRaises(InvalidInputError):
            covering_radius(presets.full_shift(), letters, 4, 2)

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestCoveringRadius)
