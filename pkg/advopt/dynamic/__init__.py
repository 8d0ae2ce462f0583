from .cost_vector import CostVector, EndpointTable
from .frontier import DominanceFrontier, weakly_dominates, strictly_dominates
from .min_cost import MinCost, min_cost, h_table, sandwich_check, constrained_min_cost, forward_costs, potential_rows
from .max_min import RkValue, r_k, r_k_sequence, validate_gluing_constant
from .bracket import Bracket
from .delta import delta_bracket, certified_transitivity, gluing_constant, report_frame
