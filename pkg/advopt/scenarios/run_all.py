# absolute module imports
from advopt.exceptions import AssertionFailureError
from advopt.utils import SettingsReader, constants, rationals
from advopt.utils.system import format_print, Color
from advopt.shifts.presets import get_preset

# local module imports
from .scenario_report import ScenarioReport
from .counterexample import counterexample_check
from .hruskova import hruskova_scenario
from .covering_radius import covering_radius
from .consistency import consistency_suite

DEFAULT_HRUSKOVA_M_VALUES = [1, 2, 3, 4]
DEFAULT_HRUSKOVA_C_VALUES = ["0", "1/2"]
DEFAULT_COVERING_INSTANCES = ["golden_mean:full2", "full2:golden_mean", "golden_mean:golden_mean"]

def _run(reports, scenario, *args, **kwargs):
    """
    Runs one scenario, keeping its report whether or not it passes.
    """
    try:
        report = scenario(*args, **kwargs)
    except AssertionFailureError as e:
        report = e.report
        format_print(str(e), color=Color.RED)
    reports.append(report)
    return report

def covering_radius_report(instance, k_max, pmax, budget = None, transitivity_cap = None):
    """
    Brackets the covering radius of a preset pair "x:y" and checks the bracket is sound.
    """
    x_name, y_name = instance.split(":")
    x_sft, y_sft = get_preset(x_name), get_preset(y_name)
    bracket = covering_radius(x_sft, y_sft, k_max, pmax, budget, transitivity_cap)

    report = ScenarioReport("covering radius {}".format(instance))
    report.add_record("bracket", bracket)
    report.add_check("bracket not degraded", False, bracket.degraded)
    if x_sft == y_sft:
        report.add_check("a shift covers itself", 0, bracket.get_lo())
    report.raise_if_failed()
    return report

def run_all(settings = None, logging = False):
    """
    Runs every scripted scenario: the delta > alpha counterexample, the edge shift ground-state example for each
    M and C, covering radius brackets of preset pairs and the consistency suite.

    A failing scenario is reported and the rest still run.

    Args:
        settings            - A SettingsReader, a path to a settings file, or None for defaults.
        logging             - Print progress.

    Returns:
        List of ScenarioReport.
    """
    if not isinstance(settings, SettingsReader):
        settings = SettingsReader(settings)
    budget = constants.get_word_budget(settings)
    transitivity_cap = constants.get_transitivity_cap(settings)

    reports = []
    k_max = settings.getint("counterexample", "k_max", 50)
    _run(reports, counterexample_check, k_max, settings.getint("counterexample", "truncation", k_max))

    weights = settings.getlist("hruskova", "weights", str, []) or None
    for M in settings.getlist("hruskova", "M_values", int, DEFAULT_HRUSKOVA_M_VALUES):
        for C in settings.getlist("hruskova", "C_values", str, DEFAULT_HRUSKOVA_C_VALUES):
            _run(reports, hruskova_scenario, M, rationals.parse_rational(C, settings.get_file_path() or "C_values"),
                    weights, budget)

    k_max = settings.getint("covering_radius", "k_max", 12)
    pmax = settings.getint("covering_radius", "pmax", 4)
    for instance in settings.getlist("covering_radius", "instances", str, DEFAULT_COVERING_INSTANCES):
        _run(reports, covering_radius_report, instance, k_max, pmax, budget, transitivity_cap)

    if settings.getboolean("consistency", "enabled", True):
        _run(reports, consistency_suite, settings, logging)

    for report in reports:
        format_print("{}: {}".format(report.get_name(), "pass" if report.overall() else "FAIL"),
                color=Color.GREEN if report.overall() else Color.RED)
    return reports
