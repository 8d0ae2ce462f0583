import unittest, os

from test_advopt.test_case_with_id import TestCaseWithId
from advopt.shifts import load_sft, read_document, presets
from advopt.exceptions import SchemaError, ParsingError, FileDoesNotExistError, EmptyShiftError

class TestSftParser(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestSftParser, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))
        self.resources = os.path.join(self.test_folder, "resources")

    def test_read_document(self):

        parsed, name = read_document(os.path.join(self.resources, "golden_mean.json"))
        self.assertEqual(parsed["letters"], ["0", "1"])

        parsed, name = read_document({"letters": ["a"], "name": "one"})
        self.assertEqual(name, "one")

        with self.assertRaises(ParsingError):
            read_document(os.path.join(self.resources, "broken.json"))
        with self.assertRaises(FileDoesNotExistError):
            read_document(os.path.join(self.resources, "missing.json"))

        self.test_passed = True

    def test_allowed_documents(self):

        sft = load_sft(os.path.join(self.resources, "golden_mean.json"))
        self.assertEqual(sft, presets.golden_mean_shift())
        self.assertEqual(sft.get_name(), "golden_mean")

        sft = load_sft({"letters": [0, 1], "allowed": [[0, 1], [1, 0]]}, name="cycle")
        self.assertEqual(sft, presets.cycle_shift(2))
        self.assertEqual(sft.get_name(), "cycle")

        self.test_passed = True

    def test_forbidden_word_documents(self):

        sft = load_sft(os.path.join(self.resources, "no_three_ones.json"))
        self.assertEqual(sft.num_letters(), 7)
        self.assertEqual(sft.center_letter("011"), "1")

        golden = load_sft({"letters": ["0", "1"], "forbidden_words": [["1", "1"]]})
        self.assertEqual(golden, presets.golden_mean_shift())

        self.test_passed = True

    def test_potential_window_recodes(self):

        sft = load_sft({"letters": ["0", "1"], "allowed": [["0", "0"], ["0", "1"], ["1", "0"]]}, potential_window=1)
        self.assertEqual(list(sft.get_letters()), ["000", "001", "010", "100", "101"])

        self.test_passed = True

    def test_schema_errors(self):

        bad_documents = [
            {"allowed": [["0", "0"]]},
            {"letters": [], "allowed": []},
            {"letters": ["0", "0"], "allowed": []},
            {"letters": ["0", "1"]},
            {"letters": ["0", "1"], "allowed": [["0", "0"]], "forbidden_words": []},
            {"letters": ["0", "1"], "allowed": [["0", "2"]]},
            {"letters": ["0", "1"], "allowed": [["0", "0", "1"]]},
            {"letters": [0.5], "allowed": []},
            {"letters": ["0", "1"], "allowed": [["0", "0"]], "colour": "red"},
            {"letters": ["0", "1"], "allowed": [["0", "0"]], "step": 2},
            {"letters": ["0", "1"], "forbidden_words": [["1", "1", "1"]], "step": 1},
            {"letters": ["0", "1"], "forbidden_words": [["1", "1"]], "step": 0},
        ]
        for document in bad_documents:
            with self.assertRaises(SchemaError):
                load_sft(document)

        with self.assertRaises(EmptyShiftError):
            load_sft({"letters": ["0", "1"], "allowed": [["0", "1"]]})

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestSftParser)
