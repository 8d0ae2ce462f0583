"""
Cross-module checks on small preset instances: every bound computed one way must agree with the bounds and values
computed another way.
"""

# absolute module imports
from advopt.exceptions import InconsistencyError
from advopt.utils import constants, rationals
from advopt.utils.system import log
from advopt.shifts.presets import golden_mean_shift, full_shift, one_letter_shift
from advopt.potentials import hamming_preset, y_weights_potential
from advopt.dynamic import (delta_bracket, certified_transitivity, gluing_constant, sandwich_check,
        validate_gluing_constant, r_k_sequence)
from advopt.cycles import psi_periodic, classical_value
from advopt.ground_states import ImprovementSearch, certify_orbit
from advopt.theta import effective_potential, alpha_estimate

# local module imports
from .scenario_report import ScenarioReport

DEFAULT_K_MAX = 10
DEFAULT_PMAX = 4
DEFAULT_L = 2

def _hamming(x_sft, y_sft):
    return x_sft, y_sft, hamming_preset(x_sft.get_alphabet(), y_sft.get_alphabet()), None

def _classical(y_sft, weights):
    x_sft = one_letter_shift()
    return x_sft, y_sft, y_weights_potential(x_sft.get_alphabet(), y_sft.get_alphabet(), weights), weights

INSTANCES = {
    "golden_mean_vs_full2": lambda: _hamming(golden_mean_shift(), full_shift()),
    "full2_vs_golden_mean": lambda: _hamming(full_shift(), golden_mean_shift()),
    "classical_golden_mean": lambda: _classical(golden_mean_shift(), {"0": 0, "1": 1}),
    "classical_full3": lambda: _classical(full_shift(("0", "1", "2")), {"0": -1, "1": 2, "2": rationals.divide(1, 2)}),
}

def check_instance(report, name, x_sft, y_sft, p, weights, k_max, pmax, L, W, variation_budget = 0,
        transitivity_cap = None, logging = False):
    """
    Adds the checks of one instance to report.

    Args:
        weights             - The classical weights if x_sft is the one point shift, else None.
        transitivity_cap    - Largest transitivity constant to try, None for the default of each shift.
    """
    log(logging, "Consistency checks on {}.".format(name), bold=True)
    D_X = certified_transitivity(x_sft, transitivity_cap)

    bracket = delta_bracket(x_sft, y_sft, p, k_max, pmax, transitivity_cap=transitivity_cap)
    report.add_record("{} delta".format(name), bracket)
    report.add_check("{}: delta bracket not degraded".format(name), False, bracket.degraded)

    sequence = r_k_sequence(x_sft, y_sft, p, k_max)
    violations = validate_gluing_constant(sequence, gluing_constant(p, D_X))[1]
    report.add_check("{}: r_(m+n) <= r_m + r_n + c for m + n <= {}".format(name, k_max), [], violations)
    report.add_check("{}: min_cost <= H <= min_cost + 4 D_X ||f|| on every r_k maximizer".format(name), True,
            all(sandwich_check(x_sft, p, entry.argmax, D_X) for entry in sequence))

    try:
        theta = alpha_estimate(x_sft, y_sft, p, L, [bracket], variation_budget, transitivity_cap)
        report.add_record("{} alpha estimate".format(name), theta)
        report.add_check("{}: effective potential bracket meets the delta bracket".format(name), True, True)
    except InconsistencyError as e:
        report.add_check("{}: effective potential bracket meets the delta bracket".format(name), True, str(e), False)

    orbits = y_sft.enumerate_periodic_orbits(pmax)
    psi = {orbit: psi_periodic(x_sft, p, orbit).get_value() for orbit in orbits}
    best = max(psi.values())
    report.add_check("{}: best periodic psi is the delta lower bound".format(name), bracket.get_lo(), best)

    search = ImprovementSearch(y_sft, x_sft, p, 0)
    certified = [orbit for orbit in orbits if certify_orbit(orbit, x_sft, p, 0, W, search=search).is_certified()]
    maximizing = [orbit for orbit in orbits if psi[orbit] == best]
    report.add_record("{} certified orbits".format(name), [str(orbit) for orbit in certified])
    report.add_record("{} maximizing orbits".format(name), [str(orbit) for orbit in maximizing])
    report.add_check("{}: every psi maximizing orbit is certified at W = {}".format(name, W), True,
            all(orbit in certified for orbit in maximizing))

    if weights is None:
        return

    classical = classical_value(y_sft, weights)
    center = effective_potential(x_sft, y_sft, p, L, transitivity_cap=transitivity_cap).maximum().mean
    report.add_check("{}: effective potential maximum equals the classical maximum".format(name), classical, center)
    report.add_check("{}: delta bracket contains the classical maximum".format(name), True, bracket.contains(classical))
    if pmax >= y_sft.num_letters():
        report.add_check("{}: alpha_per equals the classical maximum".format(name), classical, bracket.get_lo())
    report.add_check("{}: certified orbits at W = {} are exactly the psi maximizing orbits".format(name, W),
            [str(orbit) for orbit in maximizing], [str(orbit) for orbit in certified])

def consistency_suite(settings = None, logging = False):
    """
    Runs the cross-module checks on the preset instances.

    Settings, all in [consistency]: classical_only, k_max, pmax, L, W (default 2 pmax); [theta] variation_budget;
    [transitivity] cap.

    Returns:
        ScenarioReport. Raises AssertionFailureError if a check fails.
    """
    get_int = (lambda prop, default: default) if settings is None else (
            lambda prop, default: settings.getint("consistency", prop, default))
    classical_only = False if settings is None else settings.getboolean("consistency", "classical_only", False)
    variation_budget = 0 if settings is None else settings.getrational("theta", "variation_budget", 0)
    transitivity_cap = constants.get_transitivity_cap(settings)
    k_max = get_int("k_max", DEFAULT_K_MAX)
    pmax = get_int("pmax", DEFAULT_PMAX)
    L = get_int("L", DEFAULT_L)
    W = get_int("W", 2 * pmax)

    report = ScenarioReport("consistency")
    report.add_record("parameters", {"k_max": k_max, "pmax": pmax, "L": L, "W": W, "classical_only": classical_only})
    for name in sorted(INSTANCES):
        x_sft, y_sft, p, weights = INSTANCES[name]()
        if classical_only and weights is None:
            continue
        check_instance(report, name, x_sft, y_sft, p, weights, k_max, pmax, L, W, variation_budget, transitivity_cap,
                logging)

    report.raise_if_failed()
    return report
