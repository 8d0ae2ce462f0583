import unittest, os, io, json, contextlib

from test_advopt.test_case_with_id import TestCaseWithId
from advopt.command_line import build_parser, main, render
from advopt.dynamic import Bracket
from advopt.scenarios import ScenarioReport

class TestCommandLine(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestCommandLine, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))
        self.resources_path = os.path.join(self.test_folder, "resources")
        self.output_path = os.path.join(self.test_folder, "output")

    def instance_arguments(self):
        return ["--x", os.path.join(self.resources_path, "golden_mean.json"),
                "--y", os.path.join(self.resources_path, "full2.json"),
                "--f", os.path.join(self.resources_path, "hamming.json")]

    def run_main(self, argv):
        stdout = io.StringIO()
        with contextlib.redirect_stdout(stdout):
            exit_code = main(argv)
        return exit_code, stdout.getvalue()

    def test_parser(self):

        opt = build_parser().parse_args(["rk"] + self.instance_arguments() + ["--k", "3"])
        self.assertEqual(opt.command, "rk")
        self.assertEqual(opt.k, 3)
        self.assertTrue(opt.pruning)
        self.assertEqual(opt.format, "json")

        opt = build_parser().parse_args(["delta"] + self.instance_arguments() + ["--kmax", "4", "--pmax", "2",
                "--report", "out.csv"])
        self.assertEqual(opt.report_path, "out.csv")

        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                build_parser().parse_args(["rk"] + self.instance_arguments())
        self.assertEqual(context.exception.code, 2)

        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                build_parser().parse_args(["--format", "yaml", "counterexample"])
        self.assertEqual(context.exception.code, 2)

        self.test_passed = True

    def test_rk(self):

        exit_code, output = self.run_main(["rk"] + self.instance_arguments() + ["--k", "3"])
        self.assertEqual(exit_code, 0)
        document = json.loads(output)
        self.assertEqual(document["r_k"], "1")
        self.assertEqual(document["argmax"], "011")

        self.test_passed = True

    def test_alpha_per(self):

        exit_code, output = self.run_main(["alpha-per"] + self.instance_arguments() + ["--pmax", "3"])
        self.assertEqual(exit_code, 0)
        document = json.loads(output)
        self.assertEqual(document["alpha_per"], "1/2")
        self.assertEqual(document["beta_per"], document["gamma_per"])
        self.assertEqual(document["orbit"], "1")

        self.test_passed = True

    def test_delta_report(self):

        file_path = os.path.join(self.output_path, "delta.csv")
        exit_code, output = self.run_main(["delta"] + self.instance_arguments() + ["--kmax", "6", "--pmax", "3",
                "--report", file_path])
        self.assertEqual(exit_code, 0)
        self.assertEqual(json.loads(output)["lo"], "1/2")

        with open(file_path, "r") as report_file:
            lines = report_file.read().strip().splitlines()
        self.assertEqual(lines[0], "k,r_k,r_k/k,hi_k,lo")
        self.assertEqual(len(lines), 7)
        self.assertEqual(lines[1].split(",")[-1], "1/2")

        self.test_passed = True

    def test_scenario_commands(self):

        exit_code, output = self.run_main(["--format", "text", "hruskova", "--M", "1", "--C", "1/2"])
        self.assertEqual(exit_code, 0)
        self.assertTrue(output.startswith("hruskova M=1 C=1/2 [PASS]"))

        exit_code, output = self.run_main(["counterexample", "--kmax", "10"])
        self.assertEqual(exit_code, 0)
        self.assertTrue(json.loads(output)["overall"])

        exit_code, output = self.run_main(["--format", "csv", "counterexample", "--kmax", "10"])
        self.assertEqual(exit_code, 0)
        self.assertTrue(output.startswith("scenario,check,expected,actual,pass"))

        self.test_passed = True

    def test_run_all_with_output(self):

        file_path = os.path.join(self.output_path, "run_all.json")
        with contextlib.redirect_stderr(io.StringIO()) as stderr:
            exit_code, output = self.run_main(["--format", "json", "--settings",
                    os.path.join(self.resources_path, "run_all.ini"), "--output", file_path, "run-all"])
        self.assertEqual(exit_code, 0)
        with open(file_path, "r") as result_file:
            documents = json.load(result_file)
        self.assertEqual(len(documents), 7)
        self.assertTrue(all(document["overall"] for document in documents))
        # status lines go to stderr, so stdout is exactly the JSON result
        self.assertEqual(json.loads(output), documents)
        self.assertIn("counterexample: pass", stderr.getvalue())

        self.test_passed = True

    def test_errors_exit(self):

        with contextlib.redirect_stderr(io.StringIO()) as stderr:
            with self.assertRaises(SystemExit) as context:
                self.run_main(["counterexample", "--kmax", "1"])
        self.assertEqual(context.exception.code, 1)
        self.assertIn("ERROR", stderr.getvalue())

        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as context:
                self.run_main(["alpha"] + self.instance_arguments() + ["--L", "1", "--kmax", "4"])
        self.assertEqual(context.exception.code, 2)

        self.test_passed = True

    def test_render(self):

        bracket = Bracket(0, 1)
        self.assertEqual(json.loads(render(bracket, "json"))["hi"], "1")
        self.assertIn("lo: 0", render(bracket, "text"))

        report = ScenarioReport("example")
        report.add_check("one", 1, 1)
        self.assertTrue(render([report], "text").startswith("example [PASS]"))
        self.assertEqual(len(render([report], "csv").strip().splitlines()), 2)

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestCommandLine)
