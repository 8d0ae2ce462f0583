import unittest, os

from test_advopt.test_case_with_id import TestCaseWithId
from advopt.utils import SettingsReader
from advopt.scenarios import run_all, reports_frame

class TestRunAll(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestRunAll, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))
        self.resources_path = os.path.join(self.test_folder, "resources")

    def test_small_run(self):

        reports = run_all(os.path.join(self.resources_path, "run_all.ini"))
        names = [report.get_name() for report in reports]
        self.assertEqual(names, ["counterexample", "hruskova M=1 C=0", "hruskova M=1 C=1/2", "hruskova M=2 C=0",
                "hruskova M=2 C=1/2", "covering radius golden_mean:full2", "covering radius golden_mean:golden_mean"])
        self.assertTrue(all(report.overall() for report in reports))
        self.assertTrue(all(reports_frame(reports)["pass"]))

        self.test_passed = True

    def test_failing_scenario_is_kept(self):

        settings = SettingsReader(os.path.join(self.resources_path, "run_all.ini"))
        settings.set("hruskova", "weights", "[{}]".format(", ".join(["0"] * 12)))
        settings.set("hruskova", "M_values", "[1]")
        settings.set("hruskova", "C_values", "[0]")
        reports = run_all(settings)
        self.assertEqual(len(reports), 4)
        self.assertFalse(reports[1].overall())
        self.assertTrue(reports[0].overall())
        self.assertTrue(reports[-1].overall())

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestRunAll)
