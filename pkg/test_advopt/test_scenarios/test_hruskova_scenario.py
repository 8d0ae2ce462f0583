import unittest, os
from fractions import Fraction

from test_advopt.test_case_with_id import TestCaseWithId
from advopt.scenarios import hruskova_scenario
from advopt.exceptions import InvalidValueError, AssertionFailureError

class TestHruskovaScenario(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestHruskovaScenario, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))

    def test_scenario_passes(self):

        for M in range(1, 4):
            for C in (0, Fraction(1, 2)):
                report = hruskova_scenario(M, C)
                self.assertTrue(report.overall(), report.to_text())
                self.assertEqual(report.get_name(), "hruskova M={} C={}".format(M, C))

        self.test_passed = True

    def test_every_window_is_examined(self):

        for M in (1, 3):
            windows = hruskova_scenario(M, 0).get_records()["windows_of_y_M"]
            self.assertEqual(len(windows), 2 * M + 4)
            self.assertIn(["AA"] * (M + 1), windows)
            self.assertIn(["AA"] * M + ["AB"], windows)
            self.assertIn(["DD"] * (M + 1), windows)

        self.test_passed = True

    def test_string_C(self):

        report = hruskova_scenario(2, "1/2")
        self.assertTrue(report.overall())
        self.assertEqual(report.get_records()["certificate"].get_margin(), Fraction(1, 2))

        self.test_passed = True

    def test_invalid_arguments(self):

        for M in (0, 9, 2.0):
            with self.assertRaises(InvalidValueError):
                hruskova_scenario(M, 0)
        for C in (1, -1, "3/2"):
            with self.assertRaises(InvalidValueError):
                hruskova_scenario(1, C)

        self.test_passed = True

    def test_zero_weights_fail(self):

        with self.assertRaises(AssertionFailureError) as context:
            hruskova_scenario(1, 0, ["0"] * 12)
        self.assertIsNotNone(context.exception.report)
        self.assertFalse(context.exception.report.overall())

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestHruskovaScenario)
