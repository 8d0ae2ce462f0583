# external package imports
import networkx as nx

# absolute module imports
from advopt.exceptions import InvalidInputError
from advopt.utils import rationals

class WeightedDigraph(object):
    """
    A finite directed graph with exact rational edge weights.

    Node order is the order given at construction; it breaks ties between witness cycles.
    Parallel edges are rejected, so the graph and its negation carry the same edge set.
    """

    def __init__(self, nodes, edges, name = "graph"):
        """
        Creates a new WeightedDigraph.

        Args:
            nodes           - Iterable of hashable node identifiers.
            edges           - Iterable of (from, to, weight) triples.
            name            - Name used in error messages.

        Returns:
            A new WeightedDigraph.
        """
        self.name = name
        self.nodes = list(nodes)
        self.index = {node: i for i, node in enumerate(self.nodes)}
        if len(self.index) != len(self.nodes):
            raise InvalidInputError("graph '{}' has repeated nodes".format(name))

        self.weights = {}
        for u, v, weight in edges:
            if u not in self.index or v not in self.index:
                raise InvalidInputError("edge ({}, {}) of graph '{}' has an unknown node".format(u, v, name))
            weight = rationals.parse_rational(weight, name)
            key = (self.index[u], self.index[v])
            if key in self.weights:
                raise InvalidInputError("graph '{}' has parallel edges ({}, {})".format(name, u, v))
            self.weights[key] = weight

        self.successors = [[] for node in self.nodes]
        for i, j in sorted(self.weights):
            self.successors[i].append(j)

    def get_name(self):
        return self.name

    def get_nodes(self):
        return list(self.nodes)

    def get_edges(self):
        return [(self.nodes[i], self.nodes[j], self.weights[(i, j)]) for i, j in sorted(self.weights)]

    def num_nodes(self):
        return len(self.nodes)

    def num_edges(self):
        return len(self.weights)

    def weight(self, u, v):
        return self.weights[(self.index[u], self.index[v])]

    def negated(self):
        return WeightedDigraph(self.nodes, [(u, v, -weight) for u, v, weight in self.get_edges()], self.name)

    def to_networkx(self):
        """
        Gets the graph as a networkx DiGraph on node indices with a "weight" edge attribute.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.nodes)))
        graph.add_weighted_edges_from((i, j, weight) for (i, j), weight in self.weights.items())
        return graph

    def cyclic_components(self):
        """
        Gets the strongly connected components that contain a directed cycle, each as a sorted list of node indices,
        ordered by their least index. Nodes outside these components lie on no cycle.
        """
        components = []
        for component in nx.strongly_connected_components(self.to_networkx()):
            component = sorted(component)
            if len(component) > 1 or (component[0], component[0]) in self.weights:
                components.append(component)
        return sorted(components)

    def __repr__(self):
        return "WeightedDigraph(name={!r}, nodes={}, edges={})".format(self.name, len(self.nodes), len(self.weights))
