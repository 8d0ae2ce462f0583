import unittest
import os, shutil

class TestCaseWithId(unittest.TestCase):
    def __init__(self, *args, **kwargs):
        super(TestCaseWithId, self).__init__(*args, **kwargs)
        self.test_passed = False
        self.test_name = self.id()
        self.test_folder = ""

    # clean up after each test case
    def tearDown(self):
        local_output = os.path.join(self.test_folder, "output")
        advopthome = os.environ.get('ADVOPT_HOME', os.getcwd())
        if os.path.isdir(local_output):
            outcome = "passed_tests_outputs" if self.test_passed else "failed_tests_outputs"
            destination = os.path.join(advopthome, outcome, self.test_name)
            os.makedirs(os.path.dirname(destination), exist_ok=True)
            if os.path.isdir(destination):
                shutil.rmtree(destination)
            shutil.move(local_output, destination)
