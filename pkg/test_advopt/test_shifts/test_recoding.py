import unittest, os

from test_advopt.test_case_with_id import TestCaseWithId
from test_advopt import oracles
from advopt.shifts import Word, recode, higher_block, recoding_window, presets
from advopt.exceptions import InvalidValueError, InvalidInputError, BudgetExceededError, EmptyShiftError

class TestRecoding(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestRecoding, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))

    def test_recoding_window(self):

        self.assertEqual(recoding_window(1, 0), 0)
        self.assertEqual(recoding_window(2, 0), 1)
        self.assertEqual(recoding_window(3, 0), 1)
        self.assertEqual(recoding_window(4, 0), 2)
        self.assertEqual(recoding_window(1, 2), 2)

        self.test_passed = True

    def test_one_step_recoding_is_the_identity(self):

        sft, recoding_map = recode(["0", "1"], [["1", "1"]], 1, name="golden")
        self.assertEqual(sft, presets.golden_mean_shift())
        self.assertEqual(recoding_map.get_block_length(), 1)

        self.test_passed = True

    def test_two_step_recoding(self):

        sft, recoding_map = recode(["0", "1"], [["1", "1", "1"]], 2, name="no_three_ones")
        self.assertEqual(recoding_map.get_source_window(), 1)
        self.assertEqual(sft.num_letters(), 7)
        self.assertNotIn("111", sft.get_alphabet())
        self.assertTrue(sft.is_allowed("011", "110"))
        self.assertFalse(sft.is_allowed("011", "101"))
        self.assertEqual(sft.center_letter("010"), "1")

        source = Word("0110110", 0)
        encoded = recoding_map.encode(source)
        self.assertEqual(encoded.get_start_index(), 1)
        self.assertEqual(len(encoded), 5)
        self.assertTrue(sft.is_legal(encoded))
        self.assertEqual(recoding_map.decode(encoded), source)

        with self.assertRaises(InvalidInputError):
            recoding_map.encode(Word("01110", 0))
        with self.assertRaises(InvalidInputError):
            recoding_map.encode(Word("01", 0))

        self.test_passed = True

    def test_recoded_words_match_source_words(self):

        sft, recoding_map = recode(["0", "1"], [["1", "1", "1"]], 2)
        for k in range(1, 6):
            source_count = sum(1 for letters in oracles.legal_words(presets.full_shift(), k + 2)
                    if "111" not in "".join(letters))
            self.assertEqual(sft.count_words(k), source_count)

        self.test_passed = True

    def test_recoding_errors(self):

        with self.assertRaises(InvalidValueError):
            recode(["0", "1"], [["1", "1", "1"]], 1)
        with self.assertRaises(InvalidValueError):
            recode(["0", "1"], [], 0)
        with self.assertRaises(BudgetExceededError):
            recode(["0", "1", "2"], [], 1, potential_window=3, budget=100)
        with self.assertRaises(EmptyShiftError):
            recode(["0", "1"], [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]], 1)

        self.test_passed = True

    def test_higher_block(self):

        golden = presets.golden_mean_shift()
        block_sft, recoding_map = higher_block(golden, 1)
        self.assertEqual(list(block_sft.get_letters()), ["000", "001", "010", "100", "101"])
        self.assertEqual(block_sft.center_letter("010"), "1")
        self.assertTrue(block_sft.is_allowed("001", "010"))
        self.assertFalse(block_sft.is_allowed("001", "000"))
        self.assertEqual(block_sft.count_words(4), golden.count_words(6))
        self.assertEqual(block_sft.transitivity_constant(), 4)

        same, identity = higher_block(golden, 0)
        self.assertEqual(same, golden)

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestRecoding)
