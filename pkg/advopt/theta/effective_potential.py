# absolute module imports
from advopt.exceptions import InvalidValueError
from advopt.utils import rationals
from advopt.utils.system import log, Color
from advopt.shifts import higher_block
from advopt.cycles import WeightedDigraph, max_mean_cycle
from advopt.dynamic import Bracket

# local module imports
from .selector import build_selector

class EffectivePotential(object):
    """
    A locally constant potential g_L on Y, a function of y|_{-R}^{R}, whose classical maximum over invariant measures
    is within error_bound of alpha(f).

    g_L(B) averages f over the window against the X-word the selector picks for B, with the averaging length
    Q = 2R + 1.
    """

    def __init__(self, selector, values, error_bound, variation_budget = 0, block_sft = None, recoding_map = None):
        """
        Args:
            selector        - The SelectorTable the values come from.
            values          - Dict from Y letter tuple of length 2R + 1 to rational.
            error_bound     - E_L.
            variation_budget - The part of E_L added for nonzero variations.
            block_sft       - Y recoded by window R, built on demand if None.
            recoding_map    - Its RecodingMap.
        """
        self.selector = selector
        self.values = dict(values)
        self.error_bound = error_bound
        self.variation_budget = variation_budget
        self.block_sft = block_sft
        self.recoding_map = recoding_map

    def get_selector(self):
        return self.selector

    def get_window_radius(self):
        return self.selector.get_window_radius()

    def get_averaging_length(self):
        return 2 * self.get_window_radius() + 1

    def get_error_bound(self):
        return self.error_bound

    def get_values(self):
        return dict(self.values)

    def value(self, y_word):
        return self.values[tuple(y_word)]

    def get_block_sft(self):
        if self.block_sft is None:
            self.block_sft, self.recoding_map = higher_block(self.selector.y_sft, self.get_window_radius())
        return self.block_sft

    def get_recoding_map(self):
        self.get_block_sft()
        return self.recoding_map

    def graph(self):
        """
        The transition graph of the recoded Y with each edge weighted by g_L of its source block.
        """
        block_sft = self.get_block_sft()
        recoding_map = self.get_recoding_map()
        weights = {letter: self.values[recoding_map.block_of(letter)] for letter in block_sft.get_letters()}
        return WeightedDigraph(block_sft.get_letters(), [(u, v, weights[u]) for u, v in block_sft.get_allowed()],
                "g_L on {}".format(block_sft.get_name()))

    def maximum(self, karp_limit = None, howard_max_iterations = None):
        """
        The classical maximum of g_L over invariant measures of Y, with its maximizing cycle of blocks.
        """
        return max_mean_cycle(self.graph(), karp_limit, howard_max_iterations)

    def to_document(self):
        """
        Exports g_L as a potential document over the one letter X and Y recoded by window R.
        """
        recoding_map = self.get_recoding_map()
        keys = self.selector.keys()
        return {
            "x_letters": ["*"],
            "y_letters": [recoding_map.letter_of(key) for key in keys],
            "values": [[rationals.format_rational(self.values[key]) for key in keys]],
            "window_radius": self.get_window_radius(),
            "averaging_length": self.get_averaging_length(),
            "averaging_length_convention": "Q = 2R + 1",
            "error_bound": rationals.format_rational(self.error_bound),
            "error_bound_decimal_non_authoritative": rationals.format_decimal(self.error_bound),
            "variation_budget": rationals.format_rational(self.variation_budget),
        }

def effective_potential(x_sft, y_sft, p, L, variation_budget = 0, transitivity_cap = None, budget = None,
        logging = False):
    """
    Builds g_L and its error bound E_L = 4 D ||f|| / Q + variation_budget, with R = L + D and Q = 2R + 1.

    Args:
        x_sft               - The X Sft, must be certified transitive.
        y_sft               - The Y Sft.
        p                   - The Potential.
        L                   - Central radius, at least 0.
        variation_budget    - Nonnegative rational added to E_L. Radius 0 potentials have no variation, so 0 is exact
                for them.
        transitivity_cap    - Cap for the transitivity search of x_sft.
        budget              - Cap on the number of Y-words of length Q.
        logging             - Print progress and the averaging convention.

    Returns:
        EffectivePotential.
    """
    variation_budget = rationals.parse_rational(variation_budget, "variation_budget")
    if variation_budget < 0:
        raise InvalidValueError("variation_budget", variation_budget, "a nonnegative rational")

    selector = build_selector(x_sft, y_sft, p, L, transitivity_cap, budget, logging)
    R = selector.get_window_radius()
    Q = 2 * R + 1
    log(logging, "Averaging over Q = 2R + 1 = {} positions (L = {}, D = {}).".format(Q, L, selector.get_D()),
            bold=True, color=Color.YELLOW)

    rows = p.aligned(x_sft.get_alphabet(), y_sft.get_alphabet()).rows
    x_alphabet = x_sft.get_alphabet()
    y_alphabet = y_sft.get_alphabet()

    values = {}
    for key in selector.keys():
        selected = x_alphabet.to_indices(selector.select(key))
        total = sum(rows[u][j] for u, j in zip(selected, y_alphabet.to_indices(key)))
        values[key] = rationals.divide(total, Q)

    error_bound = rationals.normalize(rationals.divide(4 * selector.get_D() * p.sup_norm(), Q) + variation_budget)
    return EffectivePotential(selector, values, error_bound, variation_budget)

def mean_along_orbit(effective, orbit):
    """
    The mean of g_L along a periodic Y-orbit, the integral of g_L against its periodic measure.
    """
    R = effective.get_window_radius()
    period = orbit.get_period()
    total = sum(effective.value(orbit.window(j - R, j + R)) for j in range(period))
    return rationals.divide(total, period)

def alpha_estimate(x_sft, y_sft, p, L, brackets = (), variation_budget = 0, transitivity_cap = None, budget = None,
        karp_limit = None, howard_max_iterations = None, logging = False):
    """
    Brackets alpha(f) by [v - E_L, v + E_L], v the classical maximum of g_L, intersected with the given brackets.

    Args:
        x_sft               - The X Sft, must be certified transitive.
        y_sft               - The Y Sft.
        p                   - The Potential.
        L                   - Central radius, at least 0.
        brackets            - Brackets for the same value from other methods.

    Returns:
        Bracket. Raises InconsistencyError if the intersection is empty.
    """
    effective = effective_potential(x_sft, y_sft, p, L, variation_budget, transitivity_cap, budget, logging)
    result = effective.maximum(karp_limit, howard_max_iterations)
    error_bound = effective.get_error_bound()
    witness = {
        "source": "effective potential",
        "L": L,
        "window_radius": effective.get_window_radius(),
        "averaging_length": effective.get_averaging_length(),
        "center": result.mean,
        "error_bound": error_bound,
        "cycle": list(result.cycle),
    }
    bracket = Bracket(result.mean - error_bound, result.mean + error_bound, witness, witness)
    for other in brackets:
        bracket = bracket.intersect(other)
    return bracket
