# absolute module imports
from advopt.utils import rationals
from advopt.utils.rationals import INFINITY

class CostVector(object):
    """
    Map from X-letters to extended rationals, +inf meaning unreachable. The state of the min-plus dynamic program.
    """

    def __init__(self, alphabet, entries):
        self.alphabet = alphabet
        self.entries = tuple(entries)

    def get_alphabet(self):
        return self.alphabet

    def get_entries(self):
        return self.entries

    def get(self, letter):
        return self.entries[self.alphabet.index(letter)]

    def minimum(self):
        return min(self.entries)

    def finite_letters(self):
        return [letter for letter, value in zip(self.alphabet, self.entries) if value != INFINITY]

    def items(self):
        return zip(self.alphabet, self.entries)

    def __eq__(self, other):
        return isinstance(other, CostVector) and self.alphabet == other.alphabet and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "CostVector({})".format({letter: rationals.format_rational(value) for letter, value in self.items()})

    def to_document(self):
        return {letter: rationals.format_rational(value) for letter, value in self.items()}

class EndpointTable(object):
    """
    The values H_{a,b,v1,v2}(y) for the endpoint pairs (v1, v2) joinable by a legal X-word of the window's length.
    """

    def __init__(self, alphabet, values):
        """
        Args:
            alphabet        - The X alphabet.
            values          - Dict from (v1, v2) letter pairs to rationals, only finite entries.
        """
        self.alphabet = alphabet
        self.values = dict(values)

    def get_alphabet(self):
        return self.alphabet

    def pairs(self):
        """
        Gets the domain P_{a,b}, sorted by the alphabet order.
        """
        return sorted(self.values, key=self.alphabet.sort_key)

    def get(self, v1, v2):
        return self.values[(v1, v2)]

    def items(self):
        return [(pair, self.values[pair]) for pair in self.pairs()]

    def minimum(self):
        return min(self.values.values())

    def maximum(self):
        return max(self.values.values())

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        return isinstance(other, EndpointTable) and self.values == other.values

    def __repr__(self):
        return "EndpointTable({})".format(self.to_document())

    def to_document(self):
        return {"{},{}".format(v1, v2): rationals.format_rational(value) for (v1, v2), value in self.items()}
