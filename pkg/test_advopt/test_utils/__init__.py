import unittest
from . import test_settings_reader, test_files, test_rationals, test_constants

suite = unittest.TestSuite([test_settings_reader.suite, test_files.suite, test_rationals.suite, test_constants.suite])
