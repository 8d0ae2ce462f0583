# external package imports
import numpy as np

# absolute module imports
from advopt.exceptions import SchemaError, UnknownLetterError
from advopt.utils import rationals
from advopt.shifts import Alphabet

class Potential(object):
    """
    A locally constant potential f(x, y) = F(x(0), y(0)) stored as an exact rational matrix indexed by
    (x-letter, y-letter).
    """

    def __init__(self, x_alphabet, y_alphabet, values, name = "potential"):
        """
        Creates a new Potential.

        Args:
            x_alphabet      - Alphabet (or letter list) of the X side.
            y_alphabet      - Alphabet (or letter list) of the Y side.
            values          - Nested sequence of rationals, rows in x_alphabet order. Floats are rejected.
            name            - Name used in error messages.

        Returns:
            A new Potential.
        """
        if not isinstance(x_alphabet, Alphabet):
            x_alphabet = Alphabet(x_alphabet, "x letters of {}".format(name))
        if not isinstance(y_alphabet, Alphabet):
            y_alphabet = Alphabet(y_alphabet, "y letters of {}".format(name))

        self.name = name
        self.x_alphabet = x_alphabet
        self.y_alphabet = y_alphabet

        rows = [list(row) for row in values]
        if len(rows) != len(x_alphabet) or any(len(row) != len(y_alphabet) for row in rows):
            raise SchemaError(name, "values must be a {}x{} matrix".format(len(x_alphabet), len(y_alphabet)))

        self.values = np.empty((len(x_alphabet), len(y_alphabet)), dtype=object)
        for i, row in enumerate(rows):
            for j, value in enumerate(row):
                self.values[i, j] = rationals.parse_rational(value, name)

        # plain nested tuples are faster than object arrays inside the dynamic programs
        self.rows = tuple(tuple(row) for row in self.values.tolist())

    @classmethod
    def from_function(cls, x_alphabet, y_alphabet, function, name = "potential"):
        """
        Tabulates a function F(x-letter, y-letter) into a Potential.
        """
        if not isinstance(x_alphabet, Alphabet):
            x_alphabet = Alphabet(x_alphabet)
        if not isinstance(y_alphabet, Alphabet):
            y_alphabet = Alphabet(y_alphabet)
        return cls(x_alphabet, y_alphabet, [[function(u, v) for v in y_alphabet] for u in x_alphabet], name)

    def get_name(self):
        return self.name

    def get_x_alphabet(self):
        return self.x_alphabet

    def get_y_alphabet(self):
        return self.y_alphabet

    def get_values(self):
        return self.values.copy()

    def evaluate(self, xl, yl):
        """
        Gets F(xl, yl).

        Args:
            xl              - A letter of the X alphabet.
            yl              - A letter of the Y alphabet.

        Returns:
            The exact matrix entry. Raises UnknownLetterError for letters outside the alphabets.
        """
        return self.rows[self.x_alphabet.index(xl)][self.y_alphabet.index(yl)]

    def sup_norm(self):
        """
        Gets the largest absolute entry.
        """
        return max(abs(value) for row in self.rows for value in row)

    def min_entry(self):
        return min(value for row in self.rows for value in row)

    def max_entry(self):
        return max(value for row in self.rows for value in row)

    def shifted_sup_norm(self):
        """
        Gets min(||f||, ||f - min F||), the smaller of the sup norms of f and of f shifted so its least entry is 0.
        """
        return min(self.sup_norm(), self.max_entry() - self.min_entry())

    def aligned(self, x_alphabet, y_alphabet):
        """
        Gets the same potential with rows and columns reordered (and restricted) to the given alphabets.

        Raises UnknownLetterError if a letter of the given alphabets has no entry.
        """
        if x_alphabet == self.x_alphabet and y_alphabet == self.y_alphabet:
            return self
        return Potential(x_alphabet, y_alphabet, [[self.evaluate(u, v) for v in y_alphabet] for u in x_alphabet],
                self.name)

    def to_document(self):
        return {
            "x_letters": list(self.x_alphabet.get_letters()),
            "y_letters": list(self.y_alphabet.get_letters()),
            "values": [[rationals.format_rational(value) for value in row] for row in self.rows],
        }

    def __eq__(self, other):
        return (isinstance(other, Potential) and self.x_alphabet == other.x_alphabet
                and self.y_alphabet == other.y_alphabet and self.rows == other.rows)

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Potential(name={!r}, shape={})".format(self.name, self.values.shape)

def hamming_preset(x_alphabet, y_alphabet = None, x_key = None, y_key = None):
    """
    The Hamming potential F(u, v) = 1 - [u = v], whose adversarial value is the covering radius of the pair.

    Args:
        x_alphabet          - Alphabet of the X side.
        y_alphabet          - Alphabet of the Y side, default x_alphabet.
        x_key, y_key        - Maps letters to the symbol compared, default the letter itself. Recoded shifts pass
                their center letter map here.

    Returns:
        The Potential.
    """
    if y_alphabet is None:
        y_alphabet = x_alphabet
    x_key = x_key or (lambda letter: letter)
    y_key = y_key or (lambda letter: letter)
    return Potential.from_function(x_alphabet, y_alphabet, lambda u, v: 0 if x_key(u) == y_key(v) else 1, "hamming")

def constant_potential(x_alphabet, y_alphabet, value):
    value = rationals.parse_rational(value, "constant")
    return Potential.from_function(x_alphabet, y_alphabet, lambda u, v: value, "constant")

def y_weights_potential(x_alphabet, y_alphabet, weights, y_key = None):
    """
    Lifts a classical potential g(y(0)) on Y to F(u, v) = g(v), independent of the X letter.

    Args:
        x_alphabet          - Alphabet of the X side, usually the one letter alphabet.
        y_alphabet          - Alphabet of the Y side.
        weights             - Dict from Y letter to rational.
        y_key               - Maps letters to the key looked up in weights, default the letter itself.

    Returns:
        The Potential.
    """
    y_key = y_key or (lambda letter: letter)
    parsed = {str(letter): rationals.parse_rational(value, "y_weights") for letter, value in weights.items()}

    def weight(u, v):
        try:
            return parsed[y_key(v)]
        except KeyError:
            raise UnknownLetterError("y_weights", v) from None

    return Potential.from_function(x_alphabet, y_alphabet, weight, "y_weights")

def block_potential(x_map, y_map, function, x_alphabet = None, y_alphabet = None):
    """
    Builds a radius 0 potential on recoded shifts from a function of the source windows.

    Args:
        x_map               - RecodingMap of the X side.
        y_map               - RecodingMap of the Y side.
        function            - F'(x_window, y_window) on tuples of source letters of length 2N + 1.
        x_alphabet          - Block letters to tabulate, default all blocks of x_map.
        y_alphabet          - Block letters to tabulate, default all blocks of y_map.

    Returns:
        The Potential over block letters.
    """
    if x_alphabet is None:
        x_alphabet = x_map.get_block_alphabet()
    if y_alphabet is None:
        y_alphabet = y_map.get_block_alphabet()
    return Potential.from_function(x_alphabet, y_alphabet,
            lambda u, v: function(x_map.block_of(u), y_map.block_of(v)), "block")
