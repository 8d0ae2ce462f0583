# external package imports
from collections import namedtuple, deque

# absolute module imports
from advopt.exceptions import NoCycleError, InvalidValueError
from advopt.utils import constants

# local module imports
from .karp import karp_mean, reduced_cost_potentials
from .howard import howard_mean

MeanCycle = namedtuple("MeanCycle", ["mean", "cycle"])

METHODS = ("auto", "karp", "howard")

def _least_cycle(component, tight):
    """
    Shortest cycle of the tight subgraph, ties broken by the lexicographically least node index sequence, written
    from its least node.

    Returns:
        (length, sequence) or None.
    """
    predecessors = {node: [] for node in component}
    for node in component:
        for successor in tight[node]:
            predecessors[successor].append(node)

    best = None
    for start in component:
        limit = None if best is None else best[0] - 1
        # distance from each node to start, through nodes not below start
        distance = {start: 0}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            if limit is not None and distance[node] >= limit:
                continue
            for predecessor in predecessors[node]:
                if predecessor >= start and predecessor not in distance:
                    distance[predecessor] = distance[node] + 1
                    queue.append(predecessor)

        closing = [distance[node] for node in tight[start] if node in distance]
        if not closing:
            continue
        length = 1 + min(closing)

        sequence = [start]
        node = start
        for step in range(length - 1):
            needed = length - 1 - step
            node = next(successor for successor in tight[node] if distance.get(successor) == needed)
            sequence.append(node)

        candidate = (length, tuple(sequence))
        if best is None or candidate < best:
            best = candidate
    return best

def min_mean_cycle(g, karp_limit = None, howard_max_iterations = None, method = "auto"):
    """
    Computes the minimum over directed cycles of total weight / length, exactly.

    Nodes on no cycle are pruned first. Each strongly connected component with a cycle is solved by Karp's
    algorithm, or by Howard's policy iteration when nodes * edges exceeds karp_limit (falling back to Karp if the
    iteration cap is reached).

    Args:
        g                   - The WeightedDigraph.
        karp_limit          - Largest nodes * edges solved by Karp under method "auto".
        howard_max_iterations - Policy iteration cap.
        method              - "auto", "karp" or "howard".

    Returns:
        MeanCycle(mean, cycle): cycle attains the mean and is the shortest such cycle, then the lexicographically
        least in node order, written from its least node. Raises NoCycleError on an acyclic graph.
    """
    if method not in METHODS:
        raise InvalidValueError("method", method, "one of {}".format(", ".join(METHODS)))
    if karp_limit is None:
        karp_limit = constants.DEFAULT_KARP_LIMIT
    if howard_max_iterations is None:
        howard_max_iterations = constants.DEFAULT_HOWARD_MAX_ITERATIONS

    components = g.cyclic_components()
    if len(components) == 0:
        raise NoCycleError(g.get_name())

    solved = []
    for component in components:
        members = set(component)
        num_edges = sum(1 for node in component for successor in g.successors[node] if successor in members)

        result = None
        if method == "howard" or (method == "auto" and len(component) * num_edges > karp_limit):
            result = howard_mean(component, g.successors, g.weights, howard_max_iterations)
        if result is None:
            mean = karp_mean(component, g.successors, g.weights)
            result = (mean, reduced_cost_potentials(component, g.successors, g.weights, mean))
        solved.append((result[0], component, result[1]))

    best_mean = min(mean for mean, component, potentials in solved)

    best = None
    for mean, component, potentials in solved:
        if mean != best_mean:
            continue
        members = set(component)
        tight = {node: [successor for successor in g.successors[node] if successor in members
                and potentials[successor] == potentials[node] + g.weights[(node, successor)] - mean]
                for node in component}
        candidate = _least_cycle(component, tight)
        if candidate is not None and (best is None or candidate < best):
            best = candidate

    return MeanCycle(best_mean, [g.nodes[i] for i in best[1]])

def max_mean_cycle(g, karp_limit = None, howard_max_iterations = None, method = "auto"):
    """
    Computes the maximum cycle mean by negating the weights, with the same witness rules as min_mean_cycle.
    """
    result = min_mean_cycle(g.negated(), karp_limit, howard_max_iterations, method)
    return MeanCycle(-result.mean, result.cycle)

def howard_min_mean_cycle(g, howard_max_iterations = None):
    """
    min_mean_cycle solved by policy iteration on every component, with Karp as fallback at the iteration cap.
    """
    return min_mean_cycle(g, howard_max_iterations=howard_max_iterations, method="howard")
