"""
The weighted edge shift whose ground-state shift is not of finite type.

Vertices A, B, C, D; every vertex has a loop of weight 0, and the other edges are A-B and A-C of weight -1, C-D of
weight -2 and B-D of weight -3, in both directions. Y is the edge shift (letters are edges, an edge may be followed by
any edge leaving its head) and X is the one point shift, so H_{a,b,v1,v2}(y) is the plain Birkhoff sum of the edge
weights of y on [a, b].
"""

# absolute module imports
from advopt.exceptions import InvalidValueError, SchemaError
from advopt.utils import rationals
from advopt.shifts import Sft, Word
from advopt.shifts.presets import one_letter_shift
from advopt.potentials import y_weights_potential

HRUSKOVA_EDGES = ("AA", "AB", "AC", "BA", "BB", "BD", "CA", "CC", "CD", "DB", "DC", "DD")

HRUSKOVA_WEIGHTS = {
    "AA": 0, "AB": -1, "AC": -1,
    "BA": -1, "BB": 0, "BD": -3,
    "CA": -1, "CC": 0, "CD": -2,
    "DB": -3, "DC": -2, "DD": 0,
}

MAX_M = 8

def hruskova_shift():
    return Sft(HRUSKOVA_EDGES, [(e, f) for e in HRUSKOVA_EDGES for f in HRUSKOVA_EDGES if e[1] == f[0]], "hruskova")

def hruskova_weights(weights = None):
    """
    Gets the edge weights, optionally overridden.

    Args:
        weights             - None for the standard weights, a dict from edge to rational, or a list of 12 rationals
                in the order of HRUSKOVA_EDGES.

    Returns:
        Dict from edge to rational.
    """
    if weights is None:
        return dict(HRUSKOVA_WEIGHTS)
    if isinstance(weights, dict):
        missing = [edge for edge in HRUSKOVA_EDGES if edge not in weights]
        if missing:
            raise SchemaError("hruskova weights", "missing edges {}".format(", ".join(missing)))
        return {edge: rationals.parse_rational(weights[edge], "hruskova weights") for edge in HRUSKOVA_EDGES}
    weights = list(weights)
    if len(weights) != len(HRUSKOVA_EDGES):
        raise SchemaError("hruskova weights", "expected {} weights, got {}".format(len(HRUSKOVA_EDGES), len(weights)))
    return {edge: rationals.parse_rational(value, "hruskova weights") for edge, value in zip(HRUSKOVA_EDGES, weights)}

def hruskova_system(weights = None):
    """
    Returns:
        (x_sft, y_sft, p): the one point X, the edge shift Y and the potential F(*, e) = weight(e).
    """
    x_sft = one_letter_shift()
    y_sft = hruskova_shift()
    p = y_weights_potential(x_sft.get_alphabet(), y_sft.get_alphabet(), hruskova_weights(weights))
    return x_sft, y_sft, p

def hruskova_word(M, improved = False):
    """
    Gets y_M (or y_M' if improved) on [-1, M + 3].

    y_M runs A -> B, loops M times at B, then B -> D and stays at D; y_M' takes the route through C instead. Both
    are AA before position 0 and DD from position M + 2.
    """
    if not 1 <= M <= MAX_M:
        raise InvalidValueError("M", M, "an integer in [1, {}]".format(MAX_M))
    middle = "C" if improved else "B"
    letters = ["AA", "A" + middle] + [middle * 2] * M + [middle + "D", "DD", "DD"]
    return Word(letters, -1)

def hruskova_windows(M, n, sort_key = None):
    """
    Gets every distinct word of length n occurring in the bi-infinite y_M, including the pure AA and DD runs.

    Returns:
        List of letter tuples, sorted by sort_key if given.
    """
    if n < 1:
        raise InvalidValueError("n", n, "at least 1")
    base = hruskova_word(M)
    # n - 1 letters of padding on each side give every window meeting the transition, plus AA^n and DD^n
    letters = ["AA"] * (n - 1) + list(base.get_letters()) + ["DD"] * (n - 1)
    windows = set(tuple(letters[start:start + n]) for start in range(len(letters) - n + 1))
    return sorted(windows, key=sort_key)
