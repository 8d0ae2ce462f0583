from .selector import SelectorTable, build_selector, anchor_letter
from .effective_potential import EffectivePotential, effective_potential, mean_along_orbit, alpha_estimate
