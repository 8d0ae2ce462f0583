# absolute module imports
from advopt.exceptions import InvalidValueError
from advopt.utils import rationals
from advopt.dynamic import h_table
from advopt.ground_states import (ImprovementCertificate, ImprovementSearch, forbidden_words, hruskova_system,
        hruskova_word, hruskova_windows)
from advopt.ground_states.hruskova import MAX_M

# local module imports
from .scenario_report import ScenarioReport

FORBIDDEN_CONTEXT = 2

def _single_value(table):
    values = sorted(set(value for pair, value in table.items()))
    return values[0] if len(values) == 1 else values

def hruskova_scenario(M, C, weights = None, budget = None):
    """
    Checks the edge shift example whose ground-state shift is not of finite type, for one M and C.

    The checks are: every H on [0, M + 2] is -4 for y_M and -3 for y_M'; y_M' is an (f, C)-improvement of y_M with
    margin 1 - C, and no replacement does better; no word of length M + 1 occurring in y_M is found forbidden.
    Together these say y_M is excluded from Y_{f,C} while all of its shorter windows survive, for every M.

    Args:
        M                   - Length of the loop run, 1 to 8.
        C                   - Rational in [0, 1).
        weights             - Edge weight override (dict or list of 12), for negative controls.

    Returns:
        ScenarioReport. Raises AssertionFailureError if a check fails.
    """
    if not isinstance(M, int) or not 1 <= M <= MAX_M:
        raise InvalidValueError("M", M, "an integer in [1, {}]".format(MAX_M))
    C = rationals.parse_rational(C, "C")
    if not 0 <= C < 1:
        raise InvalidValueError("C", C, "a rational in [0, 1)")

    x_sft, y_sft, p = hruskova_system(weights)
    report = ScenarioReport("hruskova M={} C={}".format(M, rationals.format_rational(C)))

    base_word = hruskova_word(M)
    improved_word = hruskova_word(M, improved=True)
    a, b = 0, M + 2
    base_table = h_table(x_sft, p, base_word.restrict(a, b))
    improved_table = h_table(x_sft, p, improved_word.restrict(a, b))
    report.add_record("y_M", str(base_word))
    report.add_record("y_M_improved", str(improved_word))
    report.add_record("base_table", base_table)
    report.add_record("improved_table", improved_table)

    report.add_check("H on [0, M + 2] of y_M", -4, _single_value(base_table))
    report.add_check("H on [0, M + 2] of y_M'", -3, _single_value(improved_table))

    expected_margin = 1 - C
    margin = min(improved_table.get(*pair) - base_table.get(*pair) for pair in base_table.pairs()) - C
    certificate = ImprovementCertificate(base_word.restrict(a - 1, b + 1), (a, b), improved_word.restrict(a - 1, b + 1),
            margin, C, base_table, improved_table)
    report.add_record("certificate", certificate)
    report.add_check("y_M' is an (f, C)-improvement of y_M", True, certificate.validate(y_sft, x_sft, p))
    report.add_check("improvement margin", expected_margin, margin)

    search = ImprovementSearch(y_sft, x_sft, p, C, budget)
    best = search.find(base_word, a, b)
    report.add_check("best improvement margin on [0, M + 2]", expected_margin, None if best is None else best.get_margin())

    candidates = hruskova_windows(M, M + 1, y_sft.get_alphabet().sort_key)
    found = forbidden_words(y_sft, x_sft, p, C, M + 1, FORBIDDEN_CONTEXT, candidates, budget, search)
    report.add_record("windows_of_y_M", [list(candidate) for candidate in candidates])
    report.add_check("windows of length M + 1 of y_M found forbidden", [], sorted(str(word) for word in found))

    report.raise_if_failed()
    return report
