import unittest
from . import test_improvement, test_certification, test_hruskova

suite = unittest.TestSuite([test_improvement.suite, test_certification.suite, test_hruskova.suite])
