# absolute module imports
from advopt.utils import rationals

def _evaluate(component, policy, weights):
    """
    Gain and bias of a policy: each node follows policy into a cycle, its gain is that cycle's mean and its bias the
    cost-to-go relative to the cycle's least node.
    """
    gain = {}
    bias = {}
    for start in component:
        if start in gain:
            continue
        path = []
        on_path = {}
        node = start
        while node not in gain and node not in on_path:
            on_path[node] = len(path)
            path.append(node)
            node = policy[node]

        if node in on_path:
            cycle = path[on_path[node]:]
            mean = rationals.divide(sum(weights[(u, policy[u])] for u in cycle), len(cycle))
            anchor = min(cycle)
            k = cycle.index(anchor)
            ordered = cycle[k:] + cycle[:k]
            gain[anchor] = mean
            bias[anchor] = 0
            for u in reversed(ordered[1:]):
                gain[u] = mean
                bias[u] = weights[(u, policy[u])] - mean + bias[policy[u]]
            tail = path[:on_path[node]]
        else:
            tail = path

        for u in reversed(tail):
            successor = policy[u]
            gain[u] = gain[successor]
            bias[u] = weights[(u, successor)] - gain[successor] + bias[successor]
    return gain, bias

def howard_mean(component, successors, weights, max_iterations):
    """
    Howard's policy iteration for the minimum cycle mean of a strongly connected component, with exact rationals.

    At termination the gain is constant and bias satisfies bias[u] <= w(u, v) - mean + bias[v] on every edge, which
    certifies the mean as optimal.

    Args:
        component           - Sorted list of node indices of a strongly connected component with a cycle.
        successors          - successors[i] lists the successor indices of node i in the whole graph.
        weights             - Dict from (i, j) to the exact edge weight.
        max_iterations      - Iteration cap.

    Returns:
        (mean, potentials) with potentials[u] = -bias[u], or None if the cap was reached.
    """
    members = set(component)
    out = {node: [(successor, weights[(node, successor)]) for successor in successors[node] if successor in members]
            for node in component}
    policy = {node: min(out[node], key=lambda edge: (edge[1], edge[0]))[0] for node in component}

    for iteration in range(max_iterations):
        gain, bias = _evaluate(component, policy, weights)
        changed = False

        for node in component:
            best_gain, choice = gain[node], None
            for successor, weight in out[node]:
                if gain[successor] < best_gain:
                    best_gain, choice = gain[successor], successor
            if choice is not None:
                policy[node] = choice
                changed = True

        if not changed:
            for node in component:
                best, choice = bias[node], None
                for successor, weight in out[node]:
                    if gain[successor] == gain[node]:
                        value = weight - gain[node] + bias[successor]
                        if value < best:
                            best, choice = value, successor
                if choice is not None:
                    policy[node] = choice
                    changed = True

        if not changed:
            return gain[component[0]], {node: -bias[node] for node in component}

    return None
