# external package imports
from collections import namedtuple

# absolute module imports
from advopt.exceptions import InvalidInputError
from advopt.utils.rationals import INFINITY
from advopt.shifts import Word

# local module imports
from .cost_vector import CostVector, EndpointTable

MinCost = namedtuple("MinCost", ["value", "argmin", "final_vector"])

def potential_rows(x_sft, p):
    """
    Gets the rows of p in the letter order of x_sft.
    """
    return p.aligned(x_sft.get_alphabet(), p.get_y_alphabet()).rows

def y_indices(p, y_word):
    return p.get_y_alphabet().to_indices(y_word)

def forward_costs(x_sft, rows, ys, first = None):
    """
    Forward min-plus pass.

    Args:
        x_sft               - The X Sft.
        rows                - Potential rows aligned with x_sft, rows[u][j] = F(u, j).
        ys                  - Y letter indices, at least one.
        first               - X letter index pinned at the first position, or None.

    Returns:
        List over X letter indices u of the least Birkhoff sum of a legal X-word ending in u.
    """
    n = x_sft.num_letters()
    y0 = ys[0]
    cost = [rows[u][y0] if first is None or u == first else INFINITY for u in range(n)]
    predecessors = x_sft.predecessors
    for y in ys[1:]:
        cost = [min([cost[u] for u in predecessors[v]], default=INFINITY) + rows[v][y] for v in range(n)]
    return cost

def step_costs(x_sft, rows, cost, y):
    """
    Extends a forward cost list by one Y letter index.
    """
    predecessors = x_sft.predecessors
    return [min([cost[u] for u in predecessors[v]], default=INFINITY) + rows[v][y] for v in range(len(cost))]

def constrained_min_cost(x_sft, rows, ys, first = None, last = None, follower = None):
    """
    The least Birkhoff sum of a legal X-word against a Y-word, with optional endpoint constraints, and its
    lexicographically least minimizer.

    Args:
        x_sft               - The X Sft.
        rows                - Potential rows aligned with x_sft.
        ys                  - Y letter indices, at least one.
        first               - X letter index required at the first position, or None.
        last                - X letter index required at the last position, or None.
        follower            - X letter index the last letter must be allowed to precede, or None.

    Returns:
        (value, minimizer) where minimizer is a tuple of X letter indices, or (INFINITY, None) if the constraints
        cannot be met.
    """
    n = x_sft.num_letters()
    successors = x_sft.successors
    k = len(ys)

    # backward[t][u]: least cost of positions t..k-1 given x(t) = u
    backward = [None] * k
    backward[k - 1] = [rows[u][ys[k - 1]] if (last is None or u == last)
            and (follower is None or follower in successors[u]) else INFINITY for u in range(n)]
    for t in range(k - 2, -1, -1):
        after = backward[t + 1]
        y = ys[t]
        backward[t] = [rows[u][y] + min([after[v] for v in successors[u]], default=INFINITY) for u in range(n)]

    starts = range(n) if first is None else [first]
    value = min([backward[0][u] for u in starts], default=INFINITY)
    if value == INFINITY:
        return INFINITY, None

    # greedy forward pass; taking the least index at each step gives the lexicographically least minimizer
    u = next(u for u in starts if backward[0][u] == value)
    minimizer = [u]
    for t in range(k - 1):
        target = backward[t][u] - rows[u][ys[t]]
        u = next(v for v in successors[u] if backward[t + 1][v] == target)
        minimizer.append(u)
    return value, tuple(minimizer)

def min_cost(x_sft, p, y_word):
    """
    Computes min over legal X-words x of sum_j F(x(j), y(j)) against a legal Y-word.

    Args:
        x_sft               - The X Sft.
        p                   - The Potential.
        y_word              - A Word (or letter sequence) of length at least 1.

    Returns:
        MinCost(value, argmin, final_vector): argmin is the lexicographically least minimizing X Word, placed at the
        positions of y_word, and final_vector the least cost per terminal X-letter.
    """
    if len(y_word) == 0:
        raise InvalidInputError("min_cost needs a nonempty y word")
    rows = potential_rows(x_sft, p)
    ys = y_indices(p, y_word)
    start = y_word.get_start_index() if isinstance(y_word, Word) else 0

    value, minimizer = constrained_min_cost(x_sft, rows, ys)
    final_vector = CostVector(x_sft.get_alphabet(), forward_costs(x_sft, rows, ys))
    argmin = Word(x_sft.get_alphabet().to_letters(minimizer), start)
    return MinCost(value, argmin, final_vector)

def h_table(x_sft, p, y_word):
    """
    Computes H_{a,b,v1,v2}(y), the least Birkhoff sum over legal X-words on the window of y_word with x(a) = v1 and
    x(b) = v2, for every pair (v1, v2) in P_{a,b}.

    Args:
        x_sft               - The X Sft.
        p                   - The Potential.
        y_word              - A Word (or letter sequence) of length at least 1.

    Returns:
        EndpointTable over exactly the joinable pairs.
    """
    if len(y_word) == 0:
        raise InvalidInputError("h_table needs a nonempty y word")
    rows = potential_rows(x_sft, p)
    ys = y_indices(p, y_word)
    alphabet = x_sft.get_alphabet()

    values = {}
    for v1 in range(x_sft.num_letters()):
        final = forward_costs(x_sft, rows, ys, first=v1)
        for v2, value in enumerate(final):
            if value != INFINITY:
                values[(alphabet.letter(v1), alphabet.letter(v2))] = value
    return EndpointTable(alphabet, values)

def sandwich_check(x_sft, p, y_word, D_X):
    """
    Checks min_cost <= H_{a,b,v1,v2}(y) <= min_cost + 4 D_X ||f|| for every endpoint pair.

    Args:
        x_sft               - The X Sft.
        p                   - The Potential.
        y_word              - A legal Y word.
        D_X                 - Transitivity constant of x_sft.

    Returns:
        True if the estimate holds.
    """
    value = min_cost(x_sft, p, y_word).value
    table = h_table(x_sft, p, y_word)
    slack = 4 * D_X * p.sup_norm()
    return all(value <= entry <= value + slack for pair, entry in table.items())
