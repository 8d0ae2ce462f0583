import unittest
from . import test_frontier, test_min_cost, test_max_min, test_delta

suite = unittest.TestSuite([test_frontier.suite, test_min_cost.suite, test_max_min.suite, test_delta.suite])
