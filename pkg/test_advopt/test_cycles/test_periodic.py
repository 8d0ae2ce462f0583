import unittest, os
from fractions import Fraction

from test_advopt.test_case_with_id import TestCaseWithId
from test_advopt import oracles
from advopt.shifts import Sft, PeriodicOrbit, presets
from advopt.potentials import hamming_preset, y_weights_potential
from advopt.cycles import (layered_graph, psi_periodic, alpha_per_lower, periodic_values, classical_value,
        classical_graph, shortest_period)
from advopt.dynamic import min_cost, delta_bracket
from advopt.exceptions import InvalidValueError, UnknownLetterError
from advopt.utils.rationals import divide

class TestPeriodic(TestCaseWithId):
    def __init__(self, *args, **kwargs):
        super(TestPeriodic, self).__init__(*args, **kwargs)
        self.test_folder = os.path.dirname(os.path.abspath(__file__))

    def setUp(self):
        self.golden = presets.golden_mean_shift()
        self.full2 = presets.full_shift()
        self.hamming = hamming_preset(self.golden.get_alphabet(), self.full2.get_alphabet())

    def test_layered_graph(self):

        orbit = PeriodicOrbit(self.full2, "011")
        g = layered_graph(self.golden, self.hamming, orbit)
        self.assertEqual(g.num_nodes(), 6)
        self.assertEqual(g.num_edges(), 9)
        self.assertEqual(g.get_nodes()[:2], [("0", 0), ("1", 0)])
        self.assertEqual(g.weight(("1", 2), ("0", 0)), 0)
        self.assertEqual(g.weight(("0", 1), ("1", 2)), 1)

        self.test_passed = True

    def test_psi(self):

        ones = psi_periodic(self.golden, self.hamming, PeriodicOrbit(self.full2, "1"))
        self.assertEqual(ones.get_value(), Fraction(1, 2))
        self.assertEqual(ones.witness_x_word(), ["0", "1"])
        self.assertEqual(ones.to_document()["value"], "1/2")

        self.assertEqual(psi_periodic(self.golden, self.hamming, PeriodicOrbit(self.full2, "0")).get_value(), 0)
        self.assertEqual(psi_periodic(self.golden, self.hamming, PeriodicOrbit(self.full2, "01")).get_value(), 0)
        self.assertEqual(psi_periodic(self.golden, self.hamming, PeriodicOrbit(self.full2, "011")).get_value(),
                Fraction(1, 3))

        full3 = presets.full_shift(("0", "1", "2"))
        with self.assertRaises(UnknownLetterError):
            psi_periodic(self.golden, self.hamming, PeriodicOrbit(full3, "2"))

        self.test_passed = True

    def test_psi_against_simple_cycles(self):

        for x_sft, y_sft, p in oracles.corpus(40):
            for orbit in y_sft.enumerate_periodic_orbits(3):
                expected = oracles.brute_min_mean(layered_graph(x_sft, p, orbit))
                self.assertEqual(psi_periodic(x_sft, p, orbit).get_value(), expected)

        self.test_passed = True

    def test_alpha_per(self):

        value, best = alpha_per_lower(self.golden, self.full2, self.hamming, 4)
        self.assertEqual(value, Fraction(1, 2))
        self.assertEqual(str(best.get_orbit()), "1")

        values, best = periodic_values(self.golden, self.full2, self.hamming, 4)
        self.assertEqual(values, {"alpha_per": Fraction(1, 2), "beta_per": Fraction(1, 2), "gamma_per": Fraction(1, 2)})

        with self.assertRaises(InvalidValueError):
            alpha_per_lower(self.golden, self.full2, self.hamming, 0)

        self.test_passed = True

    def test_trivial_fiber_is_classical(self):

        trivial = presets.one_letter_shift()
        weights = {"0": "-1", "1": "2", "2": "1/2"}
        full3 = presets.full_shift(("0", "1", "2"))
        p = y_weights_potential(trivial.get_alphabet(), full3.get_alphabet(), weights)

        self.assertEqual(psi_periodic(trivial, p, PeriodicOrbit(full3, "012")).get_value(), Fraction(1, 2))
        self.assertEqual(alpha_per_lower(trivial, full3, p, 3)[0], 2)
        self.assertEqual(classical_value(full3, weights), 2)
        self.assertEqual(classical_value(full3, weights, mode="min"), -1)

        self.assertEqual(classical_value(self.golden, {"0": 0, "1": 1}), Fraction(1, 2))
        self.assertEqual(classical_graph(self.golden, {"0": 0, "1": 1}).weight("1", "0"), 1)

        with self.assertRaises(InvalidValueError):
            classical_value(full3, weights, mode="mean")
        with self.assertRaises(UnknownLetterError):
            classical_value(full3, {"0": 1})

        self.test_passed = True

    def test_classical_degeneration_on_corpus(self):

        for x_sft, y_sft, p, weights in oracles.classical_corpus():
            expected = oracles.brute_max_mean(classical_graph(y_sft, weights))
            self.assertEqual(classical_value(y_sft, weights), expected)
            self.assertEqual(alpha_per_lower(x_sft, y_sft, p, y_sft.num_letters())[0], expected)
            for orbit in y_sft.enumerate_periodic_orbits(2):
                mean = divide(sum(weights[letter] for letter in orbit.get_cycle()), orbit.get_period())
                self.assertEqual(psi_periodic(x_sft, p, orbit).get_value(), mean)

        self.test_passed = True

    def test_no_orbit_within_max_period(self):

        # transitive, but its shortest cycle 0 -> 1 -> 0 has length 2
        y_sft = Sft(["0", "1", "2"], [("0", "1"), ("1", "2"), ("2", "0"), ("1", "0")], "no_fixed_points")
        x_sft = presets.full_shift(("0", "1", "2"))
        p = hamming_preset(x_sft.get_alphabet(), y_sft.get_alphabet())
        self.assertEqual(shortest_period(y_sft), 2)
        self.assertEqual(shortest_period(self.golden), 1)

        with self.assertRaises(InvalidValueError) as context:
            alpha_per_lower(x_sft, y_sft, p, 1)
        self.assertIn("at least 2", str(context.exception))
        with self.assertRaises(InvalidValueError):
            periodic_values(x_sft, y_sft, p, 1)
        with self.assertRaises(InvalidValueError):
            delta_bracket(x_sft, y_sft, p, 4, 1)

        self.assertEqual(alpha_per_lower(x_sft, y_sft, p, 2)[0], 0)

        self.test_passed = True

    def test_psi_rotation_invariant(self):

        for x_sft, y_sft, p in oracles.corpus():
            for orbit in y_sft.enumerate_periodic_orbits(3):
                value = psi_periodic(x_sft, p, orbit).get_value()
                for rotation in orbit.rotations():
                    rotated = PeriodicOrbit(y_sft, rotation, canonical=True)
                    self.assertEqual(psi_periodic(x_sft, p, rotated).get_value(), value)

        self.test_passed = True

    def test_alpha_per_monotone_in_period(self):

        for x_sft, y_sft, p in oracles.corpus():
            previous = None
            for max_period in range(shortest_period(y_sft), 5):
                value = alpha_per_lower(x_sft, y_sft, p, max_period)[0]
                if previous is not None:
                    self.assertGreaterEqual(value, previous)
                previous = value

        self.test_passed = True

    def test_psi_above_window_minimum(self):

        # every lifting averages S_n f / n, which is at least the least n-window minimum over the orbit
        for x_sft, y_sft, p in oracles.corpus():
            for orbit in y_sft.enumerate_periodic_orbits(3):
                value = psi_periodic(x_sft, p, orbit).get_value()
                for n in range(1, 4):
                    bound = min(min_cost(x_sft, p, orbit.window(j, j + n - 1)).value
                            for j in range(orbit.get_period()))
                    self.assertGreaterEqual(value, divide(bound, n))

        self.test_passed = True

    def test_orbits_independent_of_letter_order(self):

        def rotation_classes(sft, max_period):
            return {frozenset(tuple(rotation) for rotation in orbit.rotations())
                    for orbit in sft.enumerate_periodic_orbits(max_period)}

        for x_sft, y_sft, p in oracles.corpus(60):
            reordered = Sft(list(reversed(y_sft.get_letters())), sorted(y_sft.get_allowed(), reverse=True), "reordered")
            self.assertEqual(rotation_classes(reordered, 5), rotation_classes(y_sft, 5))
            orbits = y_sft.enumerate_periodic_orbits(5)
            self.assertEqual(len(orbits), len(set(orbits)))

        self.test_passed = True

suite = unittest.TestLoader().loadTestsFromTestCase(TestPeriodic)
