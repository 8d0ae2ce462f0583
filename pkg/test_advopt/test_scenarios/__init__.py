import unittest
from . import (test_scenario_report, test_counterexample, test_hruskova_scenario, test_covering_radius,
        test_consistency, test_run_all, test_command_line)

suite = unittest.TestSuite([test_scenario_report.suite, test_counterexample.suite, test_hruskova_scenario.suite,
        test_covering_radius.suite, test_consistency.suite, test_run_all.suite, test_command_line.suite])
