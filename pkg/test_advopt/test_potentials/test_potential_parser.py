import unittest, os
from fractions import Fraction

from test_advopt.test_case_with_id import TestCaseWithId
from advopt.shifts import presets, load_sft
from advopt.potentials import load_potential
from advopt.exceptions import SchemaError

class TestPotentialParser(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestPotentialParser, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))
        self.resources = os.path.join(self.test_folder, "resources")

    def setUp(self):
        self.golden = presets.golden_mean_shift()
        self.full2 = presets.full_shift()

    def test_explicit_values(self):

        p = load_potential(os.path.join(self.resources, "explicit.json"), self.golden, self.full2)
        self.assertEqual(p.evaluate("1", "0"), Fraction(1, 2))
        self.assertEqual(p.evaluate("1", "1"), Fraction(-3, 2))

        with self.assertRaises(SchemaError):
            load_potential({"x_letters": ["0", "1"], "y_letters": ["0", "1"], "values": [[0.5, 1], [1, 1]]},
                    self.golden, self.full2)
        with self.assertRaises(SchemaError):
            load_potential({"x_letters": ["0"], "y_letters": ["0", "1"], "values": [[0, 1]]}, self.golden, self.full2)
        with self.assertRaises(SchemaError):
            load_potential({"x_letters": ["0", "1"], "values": [[0], [1]]}, self.golden, self.full2)

        self.test_passed = True

    def test_presets(self):

        hamming = load_potential(os.path.join(self.resources, "hamming.json"), self.golden, self.full2)
        self.assertEqual(hamming.rows, ((0, 1), (1, 0)))

        constant = load_potential({"preset": "constant", "value": "-1/3"}, self.golden, self.full2)
        self.assertEqual(constant.max_entry(), Fraction(-1, 3))

        trivial = presets.one_letter_shift()
        weights = load_potential({"preset": "y_weights", "weights": {"0": "0", "1": "1"}}, trivial, self.golden)
        self.assertEqual(weights.rows, ((0, 1),))

        for document in ({"preset": "constant"}, {"preset": "y_weights", "weights": {"0": "1"}},
                {"preset": "y_weights"}, {"preset": "gaussian"}):
            with self.assertRaises(SchemaError):
                load_potential(document, trivial, self.golden)

        self.test_passed = True

    def test_recoded_shifts_use_center_letters(self):

        recoded = load_sft({"letters": ["0", "1"], "forbidden_words": [["1", "1", "1"]], "step": 2})
        hamming = load_potential({"preset": "hamming"}, recoded, self.full2)
        self.assertEqual(hamming.evaluate("010", "1"), 0)
        self.assertEqual(hamming.evaluate("101", "1"), 1)

        explicit = load_potential(os.path.join(self.resources, "explicit.json"), recoded, self.full2)
        self.assertEqual(explicit.evaluate("110", "1"), Fraction(-3, 2))

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestPotentialParser)
