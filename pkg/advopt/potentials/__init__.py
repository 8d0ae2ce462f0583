from .potential import Potential, hamming_preset, constant_potential, y_weights_potential, block_potential
from .potential_parser import load_potential
