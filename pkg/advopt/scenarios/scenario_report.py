# external package imports
import json
import pandas as pd

# absolute module imports
from advopt.exceptions import AssertionFailureError
from advopt.utils import rationals

class ScenarioReport(object):
    """
    The outcome of a scripted scenario: a list of named checks with expected and actual values, plus any extra
    records (tables, witnesses) the scenario wants to show.
    """

    def __init__(self, name):
        self.name = name
        self.checks = []
        self.records = {}

    def get_name(self):
        return self.name

    def get_checks(self):
        return list(self.checks)

    def add_check(self, description, expected, actual, passed = None):
        """
        Adds a check.

        Args:
            description     - What is checked.
            expected        - The expected rational, bool or string.
            actual          - The value obtained.
            passed          - Whether the check passed, default expected == actual.

        Returns:
            Whether the check passed.
        """
        if passed is None:
            passed = expected == actual
        self.checks.append((description, expected, actual, bool(passed)))
        return bool(passed)

    def add_record(self, key, value):
        self.records[key] = value

    def get_records(self):
        return dict(self.records)

    def overall(self):
        return all(passed for description, expected, actual, passed in self.checks)

    def failed_checks(self):
        return [description for description, expected, actual, passed in self.checks if not passed]

    def raise_if_failed(self):
        if not self.overall():
            raise AssertionFailureError(self.name, self.failed_checks(), self)

    def to_document(self):
        return {
            "name": self.name,
            "overall": self.overall(),
            "checks": [{
                "description": description,
                "expected": rationals.to_plain(expected),
                "actual": rationals.to_plain(actual),
                "pass": passed,
            } for description, expected, actual, passed in self.checks],
            "records": rationals.to_plain(self.records),
        }

    def to_json(self):
        return json.dumps(self.to_document(), indent=2, sort_keys=True)

    def to_frame(self):
        """
        One row per check, for CSV output.
        """
        return pd.DataFrame([[self.name, description, rationals.to_plain(expected), rationals.to_plain(actual), passed]
                for description, expected, actual, passed in self.checks],
                columns=["scenario", "check", "expected", "actual", "pass"])

    def to_text(self):
        lines = ["{} [{}]".format(self.name, "PASS" if self.overall() else "FAIL")]
        for description, expected, actual, passed in self.checks:
            lines.append("  {} {}: expected {}, got {}".format("ok  " if passed else "FAIL", description,
                    rationals.to_plain(expected), rationals.to_plain(actual)))
        return "\n".join(lines)

def reports_frame(reports):
    """
    Concatenates the check tables of several reports.
    """
    frames = [report.to_frame() for report in reports]
    if not frames:
        return pd.DataFrame(columns=["scenario", "check", "expected", "actual", "pass"])
    return pd.concat(frames, ignore_index=True)
