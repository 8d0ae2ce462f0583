# absolute module imports
from advopt.utils import rationals
from advopt.utils.rationals import INFINITY

def karp_mean(component, successors, weights):
    """
    Karp's minimum cycle mean of a strongly connected component, with exact rationals.

    Args:
        component           - Sorted list of node indices forming a strongly connected component with a cycle.
        successors          - successors[i] lists the successor indices of node i in the whole graph.
        weights             - Dict from (i, j) to the exact edge weight.

    Returns:
        The minimum mean over cycles of the component.
    """
    position = {node: k for k, node in enumerate(component)}
    n = len(component)
    incoming = [[] for node in component]
    for node in component:
        for successor in successors[node]:
            if successor in position:
                incoming[position[successor]].append((position[node], weights[(node, successor)]))

    # walks[k][v]: least weight of a walk of exactly k edges from the first node to v
    walks = [[INFINITY] * n for k in range(n + 1)]
    walks[0][0] = 0
    for k in range(1, n + 1):
        previous = walks[k - 1]
        walks[k] = [min([previous[u] + weight for u, weight in incoming[v]], default=INFINITY) for v in range(n)]

    best = INFINITY
    for v in range(n):
        if walks[n][v] == INFINITY:
            continue
        worst = max(rationals.divide(walks[n][v] - walks[k][v], n - k) for k in range(n) if walks[k][v] != INFINITY)
        best = min(best, worst)
    return best

def reduced_cost_potentials(component, successors, weights, mean):
    """
    Bellman-Ford distances from the first node of a component under the weights w - mean.

    Since mean is the minimum cycle mean there is no negative cycle, and an edge (u, v) lies on a minimum mean cycle
    only if potential[v] == potential[u] + w(u, v) - mean.

    Returns:
        Dict from node index to potential.
    """
    members = set(component)
    potential = {node: INFINITY for node in component}
    potential[component[0]] = 0
    for iteration in range(len(component)):
        changed = False
        for node in component:
            if potential[node] == INFINITY:
                continue
            for successor in successors[node]:
                if successor in members:
                    candidate = potential[node] + weights[(node, successor)] - mean
                    if candidate < potential[successor]:
                        potential[successor] = candidate
                        changed = True
        if not changed:
            break
    return potential
