import unittest
from . import test_word, test_sft, test_orbit, test_recoding, test_sft_parser

suite = unittest.TestSuite([test_word.suite, test_sft.suite, test_orbit.suite, test_recoding.suite, test_sft_parser.suite])
