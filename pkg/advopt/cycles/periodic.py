# external package imports
from collections import namedtuple

# absolute module imports
from advopt.exceptions import InvalidValueError, UnknownLetterError
from advopt.utils import rationals

# local module imports
from .weighted_digraph import WeightedDigraph
from .mean_cycle import min_mean_cycle, max_mean_cycle

class PsiValue(object):
    """
    psi_f of the periodic measure of a Y-orbit: the least mean of f over invariant liftings, with the minimizing cycle
    of the layered graph as witness.
    """

    def __init__(self, orbit, value, witness_cycle):
        self.orbit = orbit
        self.value = value
        self.witness_cycle = list(witness_cycle)

    def get_orbit(self):
        return self.orbit

    def get_value(self):
        return self.value

    def get_witness_cycle(self):
        """
        Gets the witness as a list of (x-letter, phase) layered graph nodes.
        """
        return list(self.witness_cycle)

    def witness_x_word(self):
        """
        Gets the X letters of the witness cycle in order.
        """
        return [letter for letter, phase in self.witness_cycle]

    def __repr__(self):
        return "PsiValue(orbit={}, value={})".format(self.orbit, rationals.format_rational(self.value))

    def to_document(self):
        return {
            "orbit": str(self.orbit),
            "period": self.orbit.get_period(),
            "value": rationals.format_rational(self.value),
            "value_decimal_non_authoritative": rationals.format_decimal(self.value),
            "witness_cycle": [[letter, phase] for letter, phase in self.witness_cycle],
        }

def layered_graph(x_sft, p, orbit):
    """
    Builds the layered graph of an orbit: nodes (u, j) for X-letters u and phases j mod s0, edges (u, j) -> (v, j + 1)
    for allowed (u, v) with weight F(u, y0(j)). Nodes are ordered by phase, then X-letter.
    """
    period = orbit.get_period()
    x_letters = x_sft.get_letters()
    nodes = [(u, j) for j in range(period) for u in x_letters]
    edges = []
    for j in range(period):
        y_letter = orbit.letter_at(j)
        for u, v in x_sft.get_allowed():
            edges.append(((u, j), (v, (j + 1) % period), p.evaluate(u, y_letter)))
    return WeightedDigraph(nodes, edges, "layers of {}".format(orbit))

def psi_periodic(x_sft, p, orbit, karp_limit = None, howard_max_iterations = None):
    """
    Computes psi_f(nu) for the periodic measure nu of a Y-orbit.

    Invariant liftings of nu correspond to cycles of the layered graph, so psi_f(nu) is its minimum cycle mean.

    Args:
        x_sft               - The X Sft.
        p                   - The Potential.
        orbit               - A PeriodicOrbit of Y.

    Returns:
        PsiValue.
    """
    for letter in orbit.get_cycle():
        if letter not in p.get_y_alphabet():
            raise UnknownLetterError(p.get_y_alphabet().get_name(), letter)
    result = min_mean_cycle(layered_graph(x_sft, p, orbit), karp_limit, howard_max_iterations)
    return PsiValue(orbit, result.mean, result.cycle)

def shortest_period(sft):
    """
    Gets the least n with a closed walk of length n in sft, at most its number of letters.
    """
    for n in range(1, sft.num_letters() + 1):
        if sft.adjacency_power(n).trace() > 0:
            return n
    return None

def alpha_per_lower(x_sft, y_sft, p, max_period, karp_limit = None, howard_max_iterations = None, budget = None):
    """
    Computes the maximum of psi_f over the periodic measures of Y-orbits of period at most max_period.

    This is a lower bound for alpha(f) when X is transitive, and for delta(f) when Y is transitive too.

    Args:
        x_sft               - The X Sft.
        y_sft               - The Y Sft.
        p                   - The Potential.
        max_period          - Largest orbit period, at least 1.

    Returns:
        (value, best) where best is the PsiValue of the first orbit, by period then canonical word, attaining value.
        Raises InvalidValueError if y_sft has no orbit of period at most max_period.
    """
    if max_period < 1:
        raise InvalidValueError("max_period", max_period, "at least 1")
    best = None
    for orbit in y_sft.enumerate_periodic_orbits(max_period, budget):
        psi = psi_periodic(x_sft, p, orbit, karp_limit, howard_max_iterations)
        if best is None or psi.get_value() > best.get_value():
            best = psi
    if best is None:
        raise InvalidValueError("max_period", max_period, "at least {}, the shortest orbit period of shift '{}'".format(
                shortest_period(y_sft), y_sft.get_name()))
    return best.get_value(), best

def periodic_values(x_sft, y_sft, p, max_period, karp_limit = None, howard_max_iterations = None, budget = None):
    """
    The periodic lower values alpha_per, beta_per and gamma_per over orbits of period at most max_period.

    A periodic Y-orbit and the periodic X-orbits over it give the same three optimizations, so all three are the
    single quantity computed by alpha_per_lower.

    Returns:
        (dict of the three values, best PsiValue).
    """
    value, best = alpha_per_lower(x_sft, y_sft, p, max_period, karp_limit, howard_max_iterations, budget)
    return {"alpha_per": value, "beta_per": value, "gamma_per": value}, best

def classical_value(y_sft, weights, mode = "max", karp_limit = None, howard_max_iterations = None):
    """
    Classical ergodic optimization of a potential g(y(0)): the max or min mean cycle of the transition graph of Y with
    each edge weighted by its source letter.

    Args:
        y_sft               - The Y Sft.
        weights             - Dict from Y letter to rational.
        mode                - "max" or "min".

    Returns:
        The optimal mean.
    """
    if mode not in ("max", "min"):
        raise InvalidValueError("mode", mode, "max or min")
    parsed = {}
    for letter in y_sft.get_letters():
        if letter not in weights:
            raise UnknownLetterError("weights", letter)
        parsed[letter] = rationals.parse_rational(weights[letter], "weights")
    graph = classical_graph(y_sft, parsed)
    if mode == "max":
        return max_mean_cycle(graph, karp_limit, howard_max_iterations).mean
    return min_mean_cycle(graph, karp_limit, howard_max_iterations).mean

def classical_graph(y_sft, weights, name = None):
    """
    The transition graph of y_sft with edge (u, v) weighted weights[u].
    """
    return WeightedDigraph(y_sft.get_letters(), [(u, v, weights[u]) for u, v in y_sft.get_allowed()],
            name or y_sft.get_name())
