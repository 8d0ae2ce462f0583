from .weighted_digraph import WeightedDigraph
from .mean_cycle import MeanCycle, min_mean_cycle, max_mean_cycle, howard_min_mean_cycle
from .periodic import (PsiValue, layered_graph, psi_periodic, alpha_per_lower, periodic_values, classical_value,
        classical_graph, shortest_period)
