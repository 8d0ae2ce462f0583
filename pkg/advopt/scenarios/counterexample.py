"""
A product system whose adversarial value delta is strictly above alpha.

X is {-1, +1} with the identity map. Y is the two point compactification of the integers with y -> y + 1, fixing
-inf and +inf. f(x, y) = -sgn(x y), so the k step average against y is -x S_k(y) / k with

    S_k(y) = #positive - #negative integers in [y, y + k - 1],

and min over x of that average is -|S_k(y)| / k. Y is not of finite type, so the system is evaluated in closed form
instead of through shifts.
"""

# absolute module imports
from advopt.exceptions import InvalidValueError
from advopt.utils import rationals
from advopt.utils.rationals import INFINITY

# local module imports
from .scenario_report import ScenarioReport

X_POINTS = (-1, 1)
Y_FIXED_POINTS = (-INFINITY, INFINITY)

def sign(value):
    return (value > 0) - (value < 0)

def f(x, y):
    return -sign(x * y)

def window_sum(y, k):
    """
    S_k(y), the sum of sgn over [y, y + k - 1], for an integer y or a fixed point at infinity.
    """
    if y in Y_FIXED_POINTS:
        return sign(y) * k
    negatives = max(0, min(y + k - 1, -1) - y + 1)
    positives = max(0, y + k - 1 - max(y, 1) + 1)
    return positives - negatives

def min_average(y, k):
    """
    min over x of the k step average of f against y.
    """
    return rationals.divide(-abs(window_sum(y, k)), k)

def two_sided_min_average(y, k):
    """
    min over x of the average of f over the symmetric window [y - k + 1, y + k - 1].
    """
    return rationals.divide(-abs(window_sum(y - k + 1, 2 * k - 1)), 2 * k - 1)

def max_min_average(k, truncation, averager = min_average):
    """
    max over y in [-truncation, truncation] and the fixed points of averager(y, k).

    Returns:
        (value, least y attaining it).
    """
    best = None
    for y in list(range(-truncation, truncation + 1)) + list(Y_FIXED_POINTS):
        value = averager(y, k)
        if best is None or value > best[0]:
            best = (value, y)
    return best

def ergodic_alpha():
    """
    alpha over the ergodic product measures: Y only has the invariant measures at -inf and +inf, X = {-1, +1} is
    pointwise fixed, and psi of a point mass at y is min over x of f(x, y).
    """
    values = {y: min(f(x, y) for x in X_POINTS) for y in Y_FIXED_POINTS}
    return max(values.values()), values

def counterexample_check(k_max = 50, truncation = None):
    """
    Checks delta = 0 > alpha = -1 for the product system above.

    For every k <= k_max the maximizing y lies in [-k, 0] or at a fixed point, so any truncation >= k_max loses
    nothing.

    Args:
        k_max               - Largest horizon, at least 2.
        truncation          - Integer y values examined, default k_max.

    Returns:
        ScenarioReport. Raises AssertionFailureError if a check fails.
    """
    if truncation is None:
        truncation = k_max
    if k_max < 2:
        raise InvalidValueError("k_max", k_max, "at least 2")
    if truncation < k_max:
        raise InvalidValueError("truncation", truncation, "at least k_max = {}".format(k_max))

    report = ScenarioReport("counterexample")
    report.add_record("truncation_note", "maximizing y for k <= {} lies in [-k, 0] or at infinity; truncation {} "
            "loses nothing".format(k_max, truncation))

    at_infinity = [min_average(y, k) for k in range(1, k_max + 1) for y in Y_FIXED_POINTS]
    report.add_check("min_x A_k f(x, +-inf) = -1 for k <= {}".format(k_max), -1, min(at_infinity),
            all(value == -1 for value in at_infinity))

    estimates = []
    envelope = True
    closed_form = True
    witnesses = True
    for k in range(1, k_max + 1):
        value, y = max_min_average(k, truncation)
        witness = -(k // 2)
        estimates.append({"k": k, "value": value, "y": y, "witness": witness})
        envelope = envelope and rationals.divide(-1, k) <= value <= 0
        closed_form = closed_form and value == (0 if k % 2 == 1 else rationals.divide(-1, k))
        witnesses = witnesses and min_average(witness, k) >= rationals.divide(-1, k) and min_average(witness, k) == value
    report.add_record("delta_estimates", estimates)
    report.add_check("-1/k <= max_y min_x A_k f <= 0 for k <= {}".format(k_max), True, envelope)
    report.add_check("max_y min_x A_k f is 0 for odd k and -1/k for even k", True, closed_form)
    report.add_check("y = -floor(k/2) attains max_y min_x A_k f", True, witnesses)
    report.add_check("k = 1 gives max_y min_x A_1 f = 0", 0, estimates[0]["value"])

    alpha, psi = ergodic_alpha()
    report.add_record("psi_at_fixed_points", {str(y): value for y, value in psi.items()})
    report.add_check("alpha over the ergodic product measures", -1, alpha)

    delta_lower = estimates[-1]["value"]
    gap = delta_lower - alpha
    report.add_record("delta_limit", 0)
    report.add_check("delta - alpha >= 1 - 1/k_max", True, gap, gap >= 1 - rationals.divide(1, k_max))

    two_sided = [max_min_average(k, truncation, two_sided_min_average)[0] for k in range(1, k_max + 1)]
    report.add_check("two sided max_y min_x is 0 for k <= {} (witness y = 0)".format(k_max), 0,
            min(two_sided), all(value == 0 for value in two_sided) and all(
            two_sided_min_average(0, k) == 0 for k in range(1, k_max + 1)))

    report.raise_if_failed()
    return report
