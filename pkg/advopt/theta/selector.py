# absolute module imports
from advopt.exceptions import InvalidValueError, InconsistencyError
from advopt.utils import constants
from advopt.utils.progress_bar import ProgressBar
from advopt.shifts import Word
from advopt.dynamic import certified_transitivity, constrained_min_cost

class SelectorTable(object):
    """
    For each legal Y-word B on [-R, R], the X-word used to average f against B.

    The selected word keeps the central block [-L, L] of the unanchored minimizer and glues it, through fillers of
    D steps, to the anchor letter a0 at -R and to a letter preceding a0 at R. Consecutive windows spaced 2R + 1
    apart therefore concatenate into a legal X point.
    """

    def __init__(self, x_sft, y_sft, L, D, anchor, entries):
        """
        Args:
            x_sft, y_sft    - The shifts.
            L               - Central radius.
            D               - Transitivity constant of x_sft.
            anchor          - The anchor X letter a0.
            entries         - Dict from Y letter tuple to (X letter tuple, unanchored minimum).
        """
        self.x_sft = x_sft
        self.y_sft = y_sft
        self.L = L
        self.D = D
        self.anchor = anchor
        self.entries = dict(entries)

    def get_L(self):
        return self.L

    def get_D(self):
        return self.D

    def get_window_radius(self):
        return self.L + self.D

    def get_anchor(self):
        return self.anchor

    def keys(self):
        alphabet = self.y_sft.get_alphabet()
        return sorted(self.entries, key=alphabet.sort_key)

    def select(self, y_word):
        """
        Gets the selected X-word for a Y-word on [-R, R] as a Word on [-R, R].
        """
        return Word(self.entries[tuple(y_word)][0], -self.get_window_radius())

    def unanchored_minimum(self, y_word):
        return self.entries[tuple(y_word)][1]

    def __len__(self):
        return len(self.entries)

    def to_document(self):
        return {
            "L": self.L,
            "D": self.D,
            "window_radius": self.get_window_radius(),
            "anchor": self.anchor,
            "selected": [{"y": list(key), "x": list(self.entries[key][0])} for key in self.keys()],
        }

def anchor_letter(x_sft):
    """
    The lexicographically least X letter. After pruning every letter continues legally in both directions.
    """
    return x_sft.get_letters()[0]

def _select(x_sft, rows, ys, L, D, a0):
    R = L + D
    unanchored, center = constrained_min_cost(x_sft, rows, ys)

    # positions -R..R map to indices 0..2R
    left_end, right_start = R - L, R + L
    left_value, left = constrained_min_cost(x_sft, rows, ys[:left_end + 1], first=a0, last=center[left_end])
    right_value, right = constrained_min_cost(x_sft, rows, ys[right_start:], first=center[right_start], follower=a0)
    if left is None or right is None:
        raise InconsistencyError("no filler of {} steps exists in a shift certified transitive with D = {}".format(D, D))
    return left[:-1] + center[left_end:right_start + 1] + right[1:], unanchored

def build_selector(x_sft, y_sft, p, L, transitivity_cap = None, budget = None, logging = False):
    """
    Builds the selector table for every legal Y-word of length 2(L + D) + 1.

    Args:
        x_sft               - The X Sft, must be certified transitive.
        y_sft               - The Y Sft.
        p                   - The Potential.
        L                   - Central radius, at least 0.
        transitivity_cap    - Cap for the transitivity search of x_sft.
        budget              - Cap on the number of Y-words, default from constants.get_word_budget.
        logging             - Show a progress bar.

    Returns:
        SelectorTable.
    """
    if L < 0:
        raise InvalidValueError("L", L, "at least 0")
    D = certified_transitivity(x_sft, transitivity_cap)
    budget = constants.get_word_budget() if budget is None else budget
    R = L + D

    rows = p.aligned(x_sft.get_alphabet(), y_sft.get_alphabet()).rows
    x_alphabet = x_sft.get_alphabet()
    y_alphabet = y_sft.get_alphabet()
    a0 = x_alphabet.index(anchor_letter(x_sft))

    words = list(y_sft.enumerate_words(2 * R + 1, -R, budget))
    progress_bar = ProgressBar(0, len(words), "Selector L={} ".format(L), logging)
    entries = {}
    for word in words:
        selected, unanchored = _select(x_sft, rows, y_alphabet.to_indices(word), L, D, a0)
        entries[word.get_letters()] = (x_alphabet.to_letters(selected), unanchored)
        progress_bar.progress()
    progress_bar.finish()

    return SelectorTable(x_sft, y_sft, L, D, anchor_letter(x_sft), entries)
