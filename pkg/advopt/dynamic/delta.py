# external package imports
import pandas as pd

# absolute module imports
from advopt.exceptions import NotTransitiveError, InvalidValueError, InconsistencyError
from advopt.utils import constants, rationals, system
from advopt.cycles import alpha_per_lower

# local module imports
from .bracket import Bracket
from .max_min import r_k_sequence, validate_gluing_constant

def certified_transitivity(sft, cap = None):
    """
    Gets the transitivity constant of sft, raising NotTransitiveError if it is not certified within cap.
    """
    if cap is None:
        cap = constants.default_transitivity_cap(sft.num_letters())
    D = sft.transitivity_constant(cap)
    if D is None:
        raise NotTransitiveError(sft.get_name(), cap)
    return D

def gluing_constant(p, D_X):
    """
    Gets the gluing constant 4 D_X ||f|| used by the upper side of the delta bracket.

    Both r_k and delta move by the same constant when a constant is added to f, so the sup norm may be taken after
    shifting the least entry to 0 whenever that is smaller.
    """
    return 4 * D_X * p.shifted_sup_norm()

def delta_bracket(x_sft, y_sft, p, k_max, orbit_period_max, budget = None, transitivity_cap = None,
        karp_limit = None, howard_max_iterations = None, logging = False):
    """
    Brackets delta(f) = lim_k r_k / k.

    The upper side is min over k <= k_max of (r_k + c) / k, valid for a gluing constant c with
    r_{m+n} <= r_m + r_n + c. The constant c = 4 D_X ||f|| is first checked against every pair m + n <= k_max of the
    computed r values; if a pair needs more, c is enlarged to what the pairs need and the bracket is marked degraded.
    The lower side is the best periodic value alpha_per from orbits of period at most orbit_period_max.

    Args:
        x_sft               - The X Sft, must be certified transitive.
        y_sft               - The Y Sft, must be certified transitive.
        p                   - The Potential.
        k_max               - Largest horizon.
        orbit_period_max    - Largest Y-orbit period for the lower bound.
        budget              - Enumeration budget, default from constants.get_word_budget.
        transitivity_cap    - Cap for the transitivity search, default 4 * letters^2 per shift.
        logging             - Print progress.

    Returns:
        Bracket with a per-k table (k, r_k, hi_k). Raises InconsistencyError if lo > hi.
    """
    if k_max < 1:
        raise InvalidValueError("k_max", k_max, "at least 1")
    if orbit_period_max < 1:
        raise InvalidValueError("orbit_period_max", orbit_period_max, "at least 1")

    D_X = certified_transitivity(x_sft, transitivity_cap)
    D_Y = certified_transitivity(y_sft, transitivity_cap)

    sequence = r_k_sequence(x_sft, y_sft, p, k_max, budget, logging)
    constant = gluing_constant(p, D_X)
    required, violations = validate_gluing_constant(sequence, constant)
    degraded = len(violations) > 0
    if degraded:
        system.format_print("Gluing constant {} violated by {} pairs (m, n); enlarged to {} and the bracket is "
                "marked degraded.".format(rationals.format_rational(constant), len(violations),
                rationals.format_rational(required)), bold=True, color=system.Color.YELLOW)
        constant = required

    table = []
    hi, hi_entry = None, None
    for entry in sequence:
        hi_k = rationals.divide(entry.value + constant, entry.k)
        table.append({"k": entry.k, "r_k": entry.value, "hi_k": hi_k, "argmax": str(entry.argmax)})
        if hi is None or hi_k < hi:
            hi, hi_entry = hi_k, entry

    lo, best = alpha_per_lower(x_sft, y_sft, p, orbit_period_max, karp_limit, howard_max_iterations)
    for row in table:
        row["lo"] = lo

    system.log(logging, "delta bracket [{}, {}]".format(rationals.format_rational(lo), rationals.format_rational(hi)),
            bold=True)

    if lo > hi:
        raise InconsistencyError("periodic lower bound {} from orbit {} exceeds upper bound {} at k = {}".format(
                rationals.format_rational(lo), best.get_orbit(), rationals.format_rational(hi), hi_entry.k))

    return Bracket(lo, hi,
            lo_witness = {"source": "alpha_per", "orbit": str(best.get_orbit()), "max_period": orbit_period_max,
                    "x_cycle": best.witness_x_word()},
            hi_witness = {"source": "r_k", "k": hi_entry.k, "r_k": hi_entry.value, "argmax_y": str(hi_entry.argmax),
                    "gluing_constant": constant, "D_X": D_X, "D_Y": D_Y},
            degraded = degraded, table = table)

def report_frame(bracket):
    """
    Gets the per-k table of a delta bracket as a pandas DataFrame with columns k, r_k, r_k/k, hi_k, lo. Rationals are
    exact strings; r_k/k is a 12 digit decimal for reading only.
    """
    rows = []
    for row in bracket.table:
        rows.append({
            "k": row["k"],
            "r_k": rationals.format_rational(row["r_k"]),
            "r_k/k": rationals.format_decimal(rationals.divide(row["r_k"], row["k"])),
            "hi_k": rationals.format_rational(row["hi_k"]),
            "lo": rationals.format_rational(row["lo"]),
        })
    return pd.DataFrame(rows, columns=["k", "r_k", "r_k/k", "hi_k", "lo"])
