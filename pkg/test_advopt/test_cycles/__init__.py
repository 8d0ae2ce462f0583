import unittest
from . import test_mean_cycle, test_periodic

suite = unittest.TestSuite([test_mean_cycle.suite, test_periodic.suite])
