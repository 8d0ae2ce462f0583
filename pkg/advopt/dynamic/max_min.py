# external package imports
from collections import namedtuple
from concurrent.futures import ThreadPoolExecutor

# absolute module imports
from advopt.exceptions import InvalidValueError, BudgetExceededError
from advopt.utils import constants, system
from advopt.utils.rationals import INFINITY
from advopt.shifts import Word

# local module imports
from .frontier import DominanceFrontier
from .min_cost import potential_rows, step_costs

RkValue = namedtuple("RkValue", ["k", "value", "argmax"])

def _check_budget(y_sft, k, budget):
    if budget is None:
        budget = constants.get_word_budget()
    count = y_sft.count_words(k)
    if count > budget:
        raise BudgetExceededError("y words of length {} in '{}'".format(k, y_sft.get_name()), count, budget)

def _y_rows(x_sft, y_sft, p):
    """
    Potential rows aligned with both shifts, indexed [x letter index][y letter index].
    """
    return p.aligned(x_sft.get_alphabet(), y_sft.get_alphabet()).rows

def r_k_sequence(x_sft, y_sft, p, k_max, budget = None, logging = False):
    """
    Computes r_k = max over legal Y-words y of length k of min over legal X-words x of S_k f(x, y), for every
    k = 1, ..., k_max, in one pruned sweep.

    Y-prefixes are extended level by level in lexicographic order. Prefixes ending in the same Y-letter are pruned by
    dominance of their forward cost vectors, which never changes the value or the lexicographically least
    maximizer.

    Args:
        x_sft               - The X Sft.
        y_sft               - The Y Sft.
        p                   - The Potential.
        k_max               - Largest horizon, at least 1.
        budget              - Cap on the number of Y-words of length k_max, default from constants.get_word_budget.
        logging             - Print the frontier size of each level.

    Returns:
        List of RkValue(k, value, argmax) for k = 1..k_max, argmax a Word starting at 0.
    """
    if k_max < 1:
        raise InvalidValueError("k", k_max, "at least 1")
    _check_budget(y_sft, k_max, budget)

    rows = _y_rows(x_sft, y_sft, p)
    y_letters = y_sft.get_alphabet()
    num_x = x_sft.num_letters()

    states = [((j,), tuple(rows[u][j] for u in range(num_x))) for j in range(y_sft.num_letters())]
    results = []
    for k in range(1, k_max + 1):
        if k > 1:
            frontiers = {}
            for prefix, cost in states:
                for j in y_sft.successors[prefix[-1]]:
                    extended = tuple(step_costs(x_sft, rows, cost, j))
                    frontiers.setdefault(j, DominanceFrontier()).offer(extended, prefix + (j,))
            states = sorted(((payload, vector) for frontier in frontiers.values()
                    for vector, payload in frontier.get_entries()), key=lambda state: state[0])

        best_value, best_prefix = -INFINITY, None
        for prefix, cost in states:
            value = min(cost)
            if value > best_value:
                best_value, best_prefix = value, prefix
        results.append(RkValue(k, best_value, Word(y_letters.to_letters(best_prefix), 0)))

        system.log(logging, "r_{} = {} ({} prefixes kept)".format(k, best_value, len(states)), italics=True)

    return results

def _exhaustive_from(x_sft, y_sft, rows, k, first):
    """
    Best (value, prefix) over all Y-words of length k starting with the letter index first.
    """
    num_x = x_sft.num_letters()
    best_value, best_prefix = -INFINITY, None
    stack = [((first,), tuple(rows[u][first] for u in range(num_x)))]
    while stack:
        prefix, cost = stack.pop()
        if len(prefix) == k:
            value = min(cost)
            # depth first order is lexicographic, so only a strictly better value replaces the best
            if value > best_value:
                best_value, best_prefix = value, prefix
            continue
        for j in reversed(y_sft.successors[prefix[-1]]):
            stack.append((prefix + (j,), tuple(step_costs(x_sft, rows, cost, j))))
    return best_value, best_prefix

def r_k(x_sft, y_sft, p, k, budget = None, pruning = True, num_threads = 1, logging = False):
    """
    Computes r_k = max_y min_x S_k f(x, y) over legal words of length k.

    Args:
        x_sft               - The X Sft.
        y_sft               - The Y Sft.
        p                   - The Potential.
        k                   - The horizon, at least 1.
        budget              - Cap on the number of Y-words of length k, default from constants.get_word_budget.
        pruning             - Use the dominance pruned sweep. Otherwise every Y-word is visited, fanned out over
                first letters across num_threads threads.
        num_threads         - Threads for the unpruned enumeration.
        logging             - Print progress.

    Returns:
        (value, argmax_y) with argmax_y the lexicographically least maximizing Y Word.
    """
    if k < 1:
        raise InvalidValueError("k", k, "at least 1")
    if pruning:
        last = r_k_sequence(x_sft, y_sft, p, k, budget, logging)[-1]
        return last.value, last.argmax

    _check_budget(y_sft, k, budget)
    rows = _y_rows(x_sft, y_sft, p)
    firsts = range(y_sft.num_letters())
    with ThreadPoolExecutor(max_workers=max(1, num_threads)) as executor:
        partial = list(executor.map(lambda first: _exhaustive_from(x_sft, y_sft, rows, k, first), firsts))

    # first letters are in order, so ties keep the earliest
    best_value, best_prefix = -INFINITY, None
    for value, prefix in partial:
        if value > best_value:
            best_value, best_prefix = value, prefix
    return best_value, Word(y_sft.get_alphabet().to_letters(best_prefix), 0)

def validate_gluing_constant(r_values, constant):
    """
    Checks approximate subadditivity r_{m+n} <= r_m + r_n + constant on every available pair.

    Args:
        r_values            - Dict from k to r_k, or a list of RkValue.
        constant            - The gluing constant to validate.

    Returns:
        (required, violations): required is the least constant at least as large as the given one for which every
        checked pair holds, violations the list of (m, n, excess) pairs that exceeded the given constant.
    """
    if not isinstance(r_values, dict):
        r_values = {entry.k: entry.value for entry in r_values}
    required = constant
    violations = []
    for m in sorted(r_values):
        for n in sorted(r_values):
            if n < m or m + n not in r_values:
                continue
            excess = r_values[m + n] - r_values[m] - r_values[n]
            if excess > constant:
                violations.append((m, n, excess))
                required = max(required, excess)
    return required, violations
