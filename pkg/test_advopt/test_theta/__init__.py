import unittest
from . import test_selector, test_effective_potential

suite = unittest.TestSuite([test_selector.suite, test_effective_potential.suite])
