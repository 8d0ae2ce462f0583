# absolute module imports
from advopt.exceptions import InvalidInputError
from advopt.potentials import hamming_preset
from advopt.dynamic import delta_bracket

def covering_radius(x_sft, y_sft, k_max, pmax, budget = None, transitivity_cap = None, karp_limit = None,
        howard_max_iterations = None, logging = False):
    """
    Brackets the covering radius of the pair, delta of the Hamming potential: the asymptotic fraction of positions
    where the best X-word must differ from the worst Y-word.

    Args:
        x_sft               - The X Sft.
        y_sft               - The Y Sft, over the same symbols as x_sft.
        k_max               - Largest horizon.
        pmax                - Largest Y-orbit period for the lower bound.

    Returns:
        Bracket.
    """
    x_symbols = set(x_sft.center_letter(letter) for letter in x_sft.get_letters())
    y_symbols = set(y_sft.center_letter(letter) for letter in y_sft.get_letters())
    if not x_symbols & y_symbols:
        raise InvalidInputError("shifts '{}' and '{}' share no symbols".format(x_sft.get_name(), y_sft.get_name()))
    p = hamming_preset(x_sft.get_alphabet(), y_sft.get_alphabet(), x_sft.center_letter, y_sft.center_letter)
    return delta_bracket(x_sft, y_sft, p, k_max, pmax, budget, transitivity_cap, karp_limit, howard_max_iterations,
            logging)
