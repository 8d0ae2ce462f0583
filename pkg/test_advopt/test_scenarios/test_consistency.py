import unittest, os

from test_advopt.test_case_with_id import TestCaseWithId
from advopt.utils import SettingsReader
from advopt.scenarios import consistency_suite, ScenarioReport
from advopt.scenarios.consistency import INSTANCES, check_instance
from advopt.exceptions import NotTransitiveError
import advopt

class TestConsistency(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestConsistency, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))
        self.resources_path = os.path.join(self.test_folder, "resources")

    def test_classical_instances(self):

        settings = SettingsReader(os.path.join(self.resources_path, "consistency.ini"))
        report = consistency_suite(settings)
        self.assertTrue(report.overall(), report.to_text())
        self.assertTrue(report.get_records()["parameters"]["classical_only"])
        self.assertEqual(report.get_records()["classical_golden_mean maximizing orbits"], ["01"])
        self.assertEqual(report.get_records()["classical_full3 maximizing orbits"], ["1"])
        self.assertNotIn("golden_mean_vs_full2 delta", report.get_records())

        self.test_passed = True

    def test_hamming_instance(self):

        x_sft, y_sft, p, weights = INSTANCES["golden_mean_vs_full2"]()
        self.assertIsNone(weights)
        report = ScenarioReport("hamming")
        check_instance(report, "golden_mean_vs_full2", x_sft, y_sft, p, weights, 6, 3, 1, 6)
        self.assertTrue(report.overall(), report.to_text())

        self.test_passed = True

    def test_configured_transitivity_cap(self):

        settings_path = os.path.join(self.resources_path, "transitivity_cap.ini")
        with self.assertRaises(NotTransitiveError):
            consistency_suite(SettingsReader(settings_path))

        golden_path = os.path.join(self.resources_path, "golden_mean.json")
        full2_path = os.path.join(self.resources_path, "full2.json")
        with self.assertRaises(NotTransitiveError):
            advopt.covering_radius(settings_path, golden_path, full2_path, 4, 2)
        with self.assertRaises(NotTransitiveError):
            advopt.compute_delta(settings_path, golden_path, full2_path, os.path.join(self.resources_path,
                    "hamming.json"), 4, 2)

        # the full shift is certified at D = 1
        bracket = advopt.covering_radius(settings_path, full2_path, full2_path, 4, 2)
        self.assertEqual(bracket.get_lo(), 0)
        self.assertFalse(bracket.degraded)

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestConsistency)
