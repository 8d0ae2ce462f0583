# external package imports
import json

# local module imports
from .utils import SettingsReader, files, constants, rationals
from .exceptions import InvalidInputError
from .shifts import load_sft, split_letters, PeriodicOrbit
from .potentials import load_potential
from . import dynamic, cycles, ground_states, theta, scenarios

def load_instance(x_path, y_path, f_path):
    """
    Loads the two shifts and the potential of a product system.

    Args:
        x_path              - Local path to the ".json" document of X.
        y_path              - Local path to the ".json" document of Y.
        f_path              - Local path to the ".json" document of the potential.

    Returns:
        (x_sft, y_sft, p)
    """
    x_sft = load_sft(x_path)
    y_sft = load_sft(y_path)
    return x_sft, y_sft, load_potential(f_path, x_sft, y_sft)

def _cycle_options(settings):
    return {
        "karp_limit": settings.getint("cycles", "karp_limit", constants.DEFAULT_KARP_LIMIT),
        "howard_max_iterations": settings.getint("cycles", "howard_max_iterations",
                constants.DEFAULT_HOWARD_MAX_ITERATIONS),
    }

def write_document(settings_path, document, file_path):
    """
    Writes a report document as JSON, handling an existing file by [files] overwrite_method.

    Returns:
        file_path.
    """
    settings = SettingsReader(settings_path)
    files.init_file(file_path, files.OverwriteMethod.get_from_settings(settings))
    with open(file_path, "w") as output_file:
        json.dump(rationals.to_plain(document), output_file, indent=2, sort_keys=True)
        output_file.write("\n")
    return file_path

def write_report(settings_path, bracket, file_path):
    """
    Writes the per-k table of a delta bracket as CSV, handling an existing file by [files] overwrite_method.

    Returns:
        file_path.
    """
    settings = SettingsReader(settings_path)
    files.init_file(file_path, files.OverwriteMethod.get_from_settings(settings))
    dynamic.report_frame(bracket).to_csv(file_path, index=False)
    return file_path

def compute_r_k(settings_path, x_path, y_path, f_path, k, pruning = True, logging = False):
    """
    Computes r_k and its lexicographically least maximizing Y-word.

    Returns:
        Document with k, r_k and argmax.
    """
    settings = SettingsReader(settings_path)
    x_sft, y_sft, p = load_instance(x_path, y_path, f_path)
    value, argmax = dynamic.r_k(x_sft, y_sft, p, k, constants.get_word_budget(settings), pruning,
            constants.get_num_threads(settings), logging)
    return {"k": k, "r_k": value, "r_k_decimal_non_authoritative": rationals.format_decimal(value),
            "argmax": str(argmax)}

def compute_delta(settings_path, x_path, y_path, f_path, k_max, pmax, logging = False):
    """
    Brackets delta(f) from r_1, ..., r_kmax and periodic orbits of period at most pmax.

    Returns:
        Bracket.
    """
    settings = SettingsReader(settings_path)
    x_sft, y_sft, p = load_instance(x_path, y_path, f_path)
    return dynamic.delta_bracket(x_sft, y_sft, p, k_max, pmax, constants.get_word_budget(settings),
            constants.get_transitivity_cap(settings),
            logging=logging, **_cycle_options(settings))

def compute_alpha_per(settings_path, x_path, y_path, f_path, max_period, witness = False):
    """
    Computes the periodic lower values alpha_per = beta_per = gamma_per.

    Returns:
        Document with the three values, the best orbit and, if witness, its psi witness cycle.
    """
    settings = SettingsReader(settings_path)
    x_sft, y_sft, p = load_instance(x_path, y_path, f_path)
    values, best = cycles.periodic_values(x_sft, y_sft, p, max_period, budget=constants.get_word_budget(settings),
            **_cycle_options(settings))
    document = dict(values)
    document["max_period"] = max_period
    document["orbit"] = str(best.get_orbit())
    if witness:
        document["witness"] = best
    return document

def compute_alpha(settings_path, x_path, y_path, f_path, L, k_max = None, pmax = None, effective_path = None,
        logging = False):
    """
    Brackets alpha(f) through the effective potential g_L, intersected with the delta bracket if k_max and pmax are
    given.

    Args:
        effective_path      - If given, g_L is written there as a potential document.

    Returns:
        Bracket.
    """
    settings = SettingsReader(settings_path)
    x_sft, y_sft, p = load_instance(x_path, y_path, f_path)
    budget = constants.get_word_budget(settings)
    variation_budget = settings.getrational("theta", "variation_budget", 0)
    options = _cycle_options(settings)
    transitivity_cap = constants.get_transitivity_cap(settings)

    brackets = []
    if k_max is not None and pmax is not None:
        brackets.append(dynamic.delta_bracket(x_sft, y_sft, p, k_max, pmax, budget, transitivity_cap,
                logging=logging, **options))

    if effective_path is not None:
        effective = theta.effective_potential(x_sft, y_sft, p, L, variation_budget, transitivity_cap, budget,
                logging)
        write_document(settings_path, effective, effective_path)

    return theta.alpha_estimate(x_sft, y_sft, p, L, brackets, variation_budget, transitivity_cap, budget,
            logging=logging, **options)

def parse_orbit(y_sft, orbit_string):
    """
    Parses a comma separated (or, for one character letters, plain) cycle into a PeriodicOrbit of y_sft.
    """
    letters = split_letters(orbit_string, y_sft.get_alphabet())
    if len(letters) == 0:
        raise InvalidInputError("empty orbit '{}'".format(orbit_string))
    return PeriodicOrbit(y_sft, letters)

def certify_ground_state(settings_path, x_path, y_path, f_path, orbit_string, C, W):
    """
    Checks a periodic Y-orbit for (f, C)-improvements on every interval of length at most W.

    Returns:
        WindowCertificate.
    """
    settings = SettingsReader(settings_path)
    x_sft, y_sft, p = load_instance(x_path, y_path, f_path)
    orbit = parse_orbit(y_sft, orbit_string)
    return ground_states.certify_orbit(orbit, x_sft, p, rationals.parse_rational(C, "--C"), W,
            budget=constants.get_word_budget(settings))

def hruskova(settings_path, M, C):
    settings = SettingsReader(settings_path)
    weights = settings.getlist("hruskova", "weights", str, []) or None
    return scenarios.hruskova_scenario(M, rationals.parse_rational(C, "--C"), weights,
            constants.get_word_budget(settings))

def counterexample(settings_path, k_max = None, truncation = None):
    settings = SettingsReader(settings_path)
    if k_max is None:
        k_max = settings.getint("counterexample", "k_max", 50)
    if truncation is None:
        truncation = settings.getint("counterexample", "truncation", k_max)
    return scenarios.counterexample_check(k_max, truncation)

def covering_radius(settings_path, x_path, y_path, k_max, pmax, logging = False):
    """
    Brackets the covering radius of two shifts given as documents.

    Returns:
        Bracket.
    """
    settings = SettingsReader(settings_path)
    return scenarios.covering_radius(load_sft(x_path), load_sft(y_path), k_max, pmax,
            constants.get_word_budget(settings), constants.get_transitivity_cap(settings), logging=logging,
            **_cycle_options(settings))

def run_scenarios(settings_path, logging = False):
    """
    Runs every scripted scenario with the settings file as configuration.

    Returns:
        List of ScenarioReport.
    """
    return scenarios.run_all(SettingsReader(settings_path), logging)
