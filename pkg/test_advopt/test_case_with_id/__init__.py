import unittest
from .test_case_with_id import *
