import unittest
from .test_advopt import *

def execute_tests():
    unittest.TextTestRunner(verbosity=2).run(test_advopt.suite)
