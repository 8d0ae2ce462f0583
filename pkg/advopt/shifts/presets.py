"""
Shifts used throughout the examples and scenarios.
"""

# local module imports
from .sft import Sft

def full_shift(letters = ("0", "1"), name = None):
    letters = [str(letter) for letter in letters]
    if name is None:
        name = "full{}".format(len(letters))
    return Sft(letters, [(u, v) for u in letters for v in letters], name)

def golden_mean_shift(name = "golden_mean"):
    """
    The shift over {0, 1} forbidding the word 11.
    """
    return Sft(["0", "1"], [("0", "0"), ("0", "1"), ("1", "0")], name)

def cycle_shift(period = 2, name = None):
    """
    The single periodic orbit 0 -> 1 -> ... -> period - 1 -> 0.
    """
    letters = [str(i) for i in range(period)]
    if name is None:
        name = "cycle{}".format(period)
    return Sft(letters, [(letters[i], letters[(i + 1) % period]) for i in range(period)], name)

def one_letter_shift(letter = "*", name = "trivial"):
    """
    The one point shift. As the X side of a product it makes the fiber trivial and reduces every adversarial quantity
    to its classical counterpart.
    """
    return Sft([letter], [(letter, letter)], name)

PRESETS = {
    "full2": lambda: full_shift(("0", "1")),
    "full3": lambda: full_shift(("0", "1", "2")),
    "golden_mean": golden_mean_shift,
    "cycle2": lambda: cycle_shift(2),
    "trivial": one_letter_shift,
}

def get_preset(name):
    """
    Gets a preset Sft by name, one of full2, full3, golden_mean, cycle2 and trivial.
    """
    from advopt.exceptions import InvalidValueError

    try:
        return PRESETS[name]()
    except KeyError:
        raise InvalidValueError("shift preset", name, "one of {}".format(", ".join(sorted(PRESETS)))) from None
