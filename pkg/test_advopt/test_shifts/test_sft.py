import unittest, os

from test_advopt.test_case_with_id import TestCaseWithId
from test_advopt import oracles
from advopt.shifts import Sft, Word, presets
from advopt.exceptions import EmptyShiftError, InvalidInputError, InvalidValueError, BudgetExceededError

class TestSft(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestSft, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))

    def setUp(self):
        self.golden = presets.golden_mean_shift()
        self.full2 = presets.full_shift()

    def test_pruning(self):

        sft = Sft(["0", "1", "2"], [("0", "0"), ("0", "1"), ("2", "0")], "pruned")
        self.assertEqual(sft.get_letters(), ("0",))
        self.assertEqual(sft.num_edges(), 1)

        with self.assertRaises(EmptyShiftError):
            Sft(["0", "1"], [("0", "1")], "path")

        self.test_passed = True

    def test_legality(self):

        self.assertTrue(self.golden.is_legal("0100"))
        self.assertFalse(self.golden.is_legal("0110"))
        self.assertFalse(self.golden.is_legal("02"))
        self.assertTrue(self.golden.is_legal(Word("1", 5)))

        with self.assertRaises(InvalidInputError):
            self.golden.check_legal("11")

        self.test_passed = True

    def test_count_and_enumerate(self):

        self.assertEqual(self.golden.count_words(1), 2)
        self.assertEqual(self.golden.count_words(3), 5)
        self.assertEqual(self.golden.count_words(10), 144)
        self.assertEqual(self.full2.count_words(10), 1024)

        words = [str(word) for word in self.golden.enumerate_words(3)]
        self.assertEqual(words, ["000", "001", "010", "100", "101"])
        self.assertEqual(next(self.golden.enumerate_words(2, start_index=-4)).get_start_index(), -4)

        with self.assertRaises(BudgetExceededError):
            list(self.golden.enumerate_words(3, budget=4))
        with self.assertRaises(InvalidValueError):
            self.golden.count_words(0)

        self.test_passed = True

    def test_enumeration_matches_filtering(self):

        for x_sft, y_sft, p in oracles.corpus(30):
            for k in range(1, 5):
                self.assertEqual([word.get_letters() for word in y_sft.enumerate_words(k)], oracles.legal_words(y_sft, k))
                self.assertEqual(y_sft.count_words(k), len(oracles.legal_words(y_sft, k)))

        self.test_passed = True

    def test_bridges(self):

        self.assertEqual([str(word) for word in self.golden.enumerate_bridges(2, left="1", right="1")], ["00"])
        self.assertEqual([str(word) for word in self.golden.enumerate_bridges(1, left="0")], ["0", "1"])
        self.assertEqual([str(word) for word in self.golden.enumerate_bridges(3, right="1")],
                ["000", "010", "100"])

        self.test_passed = True

    def test_transitivity_constant(self):

        self.assertEqual(self.full2.transitivity_constant(), 1)
        self.assertEqual(self.golden.transitivity_constant(), 2)
        self.assertIsNone(presets.cycle_shift(2).transitivity_constant())
        self.assertIsNone(self.golden.transitivity_constant(1))
        self.assertEqual(presets.one_letter_shift().transitivity_constant(), 1)

        with self.assertRaises(InvalidValueError):
            self.golden.transitivity_constant(0)

        self.test_passed = True

    def test_periodic_orbits(self):

        self.assertEqual([str(orbit) for orbit in self.golden.enumerate_periodic_orbits(3)], ["0", "01", "001"])
        self.assertEqual([str(orbit) for orbit in self.full2.enumerate_periodic_orbits(3)],
                ["0", "1", "01", "001", "011"])
        self.assertEqual(len(self.full2.enumerate_periodic_orbits(6)), 2 + 1 + 2 + 3 + 6 + 9)
        self.assertEqual([str(orbit) for orbit in presets.cycle_shift(3).enumerate_periodic_orbits(6)], ["012"])

        with self.assertRaises(BudgetExceededError):
            self.full2.enumerate_periodic_orbits(4, budget=10)

        self.test_passed = True

    def test_presets(self):

        self.assertEqual(presets.get_preset("full3").num_letters(), 3)
        self.assertEqual(presets.get_preset("golden_mean"), self.golden)

        with self.assertRaises(InvalidValueError):
            presets.get_preset("even_shift")

        self.test_passed = True

    def test_to_document(self):

        self.assertEqual(self.golden.to_document(), {"letters": ["0", "1"], "allowed": [["0", "0"], ["0", "1"], ["1", "0"]]})

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestSft)
