import unittest
from . import test_potential, test_potential_parser

suite = unittest.TestSuite([test_potential.suite, test_potential_parser.suite])
