import unittest, os

from test_advopt.test_case_with_id import TestCaseWithId
from advopt.shifts import PeriodicOrbit, Word, presets
from advopt.shifts.orbit import is_lyndon, primitive_root
from advopt.exceptions import InvalidInputError

class TestPeriodicOrbit(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestPeriodicOrbit, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))

    def setUp(self):
        self.golden = presets.golden_mean_shift()

    def test_canonical_form(self):

        self.assertEqual(str(PeriodicOrbit(self.golden, "10")), "01")
        self.assertEqual(str(PeriodicOrbit(self.golden, "0101")), "01")
        self.assertEqual(str(PeriodicOrbit(self.golden, "010")), "001")
        self.assertEqual(PeriodicOrbit(self.golden, "100"), PeriodicOrbit(self.golden, "001"))
        self.assertEqual(PeriodicOrbit(self.golden, "0").get_period(), 1)

        with self.assertRaises(InvalidInputError):
            PeriodicOrbit(self.golden, "11")
        with self.assertRaises(InvalidInputError):
            PeriodicOrbit(self.golden, "1")
        with self.assertRaises(InvalidInputError):
            PeriodicOrbit(self.golden, "")

        self.test_passed = True

    def test_windows(self):

        orbit = PeriodicOrbit(self.golden, "001")
        self.assertEqual(orbit.letter_at(-1), "1")
        self.assertEqual(orbit.letter_at(5), "1")
        self.assertEqual(orbit.window(-1, 3), Word("10010", -1))
        self.assertEqual(orbit.rotations(), [("0", "0", "1"), ("0", "1", "0"), ("1", "0", "0")])
        self.assertEqual(orbit.to_document(), {"cycle": ["0", "0", "1"], "period": 3})

        self.test_passed = True

    def test_lyndon(self):

        self.assertTrue(is_lyndon((0, 0, 1)))
        self.assertFalse(is_lyndon((0, 1, 0)))
        self.assertFalse(is_lyndon((0, 1, 0, 1)))
        self.assertEqual(primitive_root("abab"), ("a", "b"))
        self.assertEqual(primitive_root("aba"), ("a", "b", "a"))

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestPeriodicOrbit)
