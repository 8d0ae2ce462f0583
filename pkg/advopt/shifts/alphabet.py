# absolute module imports
from advopt.exceptions import SchemaError, UnknownLetterError

class Alphabet(object):
    """
    An ordered finite list of distinct letters.

    The order is fixed at construction and is the order every lexicographic tie-break in the library uses.
    """

    def __init__(self, letters, name = "alphabet"):
        """
        Creates a new Alphabet.

        Args:
            letters         - Iterable of letters. Letters are stored as strings.
            name            - Name used in error messages.

        Returns:
            A new Alphabet.
        """
        self.name = name
        self.letters = tuple(str(letter) for letter in letters)

        if len(self.letters) == 0:
            raise SchemaError(name, "an alphabet must have at least one letter")

        self.indices = {letter: index for index, letter in enumerate(self.letters)}

        if len(self.indices) != len(self.letters):
            raise SchemaError(name, "letters must be pairwise distinct, got {}".format(list(self.letters)))

    def get_name(self):
        return self.name

    def get_letters(self):
        return self.letters

    def index(self, letter):
        """
        Gets the position of a letter in this alphabet's order.

        Args:
            letter          - The letter to look up.

        Returns:
            Its index. Raises UnknownLetterError if the letter is not in this alphabet.
        """
        try:
            return self.indices[str(letter)]
        except KeyError:
            raise UnknownLetterError(self.name, letter) from None

    def letter(self, index):
        return self.letters[index]

    def to_indices(self, letters):
        return tuple(self.index(letter) for letter in letters)

    def to_letters(self, indices):
        return tuple(self.letters[index] for index in indices)

    def sort_key(self, letters):
        """
        Key that orders words lexicographically by this alphabet's letter order.
        """
        return self.to_indices(letters)

    def __contains__(self, letter):
        return str(letter) in self.indices

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Alphabet({})".format(list(self.letters))
