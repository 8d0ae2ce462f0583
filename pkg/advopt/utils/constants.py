# external package imports
import os

# absolute module imports
from advopt.exceptions import InvalidValueError

# maximum number of words any single enumeration may visit
DEFAULT_WORD_BUDGET = 2 * 10**6

# graphs with nodes * edges above this use policy iteration instead of Karp
DEFAULT_KARP_LIMIT = 2 * 10**6

DEFAULT_HOWARD_MAX_ITERATIONS = 10**4

DEFAULT_NUM_THREADS = 1

BUDGET_ENVIRONMENT_VARIABLE = "ADVOPT_BUDGET"

def default_transitivity_cap(num_letters):
    return 4 * num_letters**2

def get_word_budget(settings = None):
    """
    Resolves the enumeration budget.

    The ADVOPT_BUDGET environment variable wins, then [enumeration] word_budget in the settings, then
    DEFAULT_WORD_BUDGET.

    Args:
        settings            - A SettingsReader, or None.

    Returns:
        The budget as a positive int.
    """
    budget = os.environ.get(BUDGET_ENVIRONMENT_VARIABLE)
    if budget is not None:
        try:
            budget = int(budget)
        except ValueError:
            raise InvalidValueError(BUDGET_ENVIRONMENT_VARIABLE, budget, "a positive integer") from None
    elif settings is not None:
        budget = settings.getint("enumeration", "word_budget", DEFAULT_WORD_BUDGET)
    else:
        budget = DEFAULT_WORD_BUDGET

    if budget < 1:
        raise InvalidValueError("word_budget", budget, "a positive integer")
    return budget

def get_transitivity_cap(settings = None, num_letters = None):
    """
    Resolves the transitivity search cap: [transitivity] cap in the settings, else the default for num_letters.

    Returns:
        The cap, or None if nothing is configured and num_letters is None, meaning the default of each shift.
    """
    default = None if num_letters is None else default_transitivity_cap(num_letters)
    if settings is None:
        return default
    # 0 stands for "not configured" since the reader treats a None default as required
    return settings.getint("transitivity", "cap", 0) or default

def get_num_threads(settings = None):
    if settings is None:
        return DEFAULT_NUM_THREADS
    return settings.getint("enumeration", "num_threads", DEFAULT_NUM_THREADS)
