# absolute module imports
from advopt.exceptions import InvalidInputError

# local module imports
from .word import Word, join_letters

def is_lyndon(indices):
    """
    Checks that a sequence is strictly smaller than each of its nontrivial rotations.
    """
    indices = tuple(indices)
    return all(indices < indices[shift:] + indices[:shift] for shift in range(1, len(indices)))

def primitive_root(letters):
    """
    Gets the shortest prefix whose repetition gives letters.
    """
    letters = tuple(letters)
    n = len(letters)
    for period in range(1, n + 1):
        if n % period == 0 and letters == letters[:period] * (n // period):
            return letters[:period]
    return letters

def least_rotation(letters, key):
    letters = tuple(letters)
    rotations = [letters[shift:] + letters[:shift] for shift in range(len(letters))]
    return min(rotations, key=key)

class PeriodicOrbit(object):
    """
    A periodic orbit of an Sft, stored as its primitive cycle word in canonical rotation.

    The orbit represents the periodic point y0 with y0(j) = cycle[j mod period] and the invariant measure equidistributed
    on its orbit.
    """

    def __init__(self, sft, letters, canonical = False):
        """
        Creates a new PeriodicOrbit.

        Args:
            sft             - The host Sft.
            letters         - A cycle of the host: each letter may follow the previous one and the first may follow
                    the last. A power of a shorter cycle is reduced to that cycle.
            canonical       - Set if letters is already primitive and least among its rotations.

        Returns:
            A new PeriodicOrbit.
        """
        letters = tuple(str(letter) for letter in letters)
        if len(letters) == 0:
            raise InvalidInputError("a periodic orbit needs at least one letter")

        if not canonical:
            if not sft.is_legal(letters + letters[:1]):
                raise InvalidInputError("'{}' is not a cycle of shift '{}'".format(join_letters(letters),
                        sft.get_name()))
            letters = least_rotation(primitive_root(letters), sft.get_alphabet().sort_key)

        self.sft = sft
        self.cycle = Word(letters, 0)

    def get_sft(self):
        return self.sft

    def get_cycle(self):
        return self.cycle

    def get_period(self):
        return len(self.cycle)

    def letter_at(self, position):
        return self.cycle.get_letters()[position % len(self.cycle)]

    def window(self, a, b):
        """
        Gets the restriction y0|_a^b of the periodic point as a Word on [a, b].
        """
        return Word([self.letter_at(j) for j in range(a, b + 1)], a)

    def rotations(self):
        """
        Gets the cycle words of every rotation of this orbit, in rotation order.
        """
        letters = self.cycle.get_letters()
        return [letters[shift:] + letters[:shift] for shift in range(len(letters))]

    def sort_key(self):
        return (self.get_period(), self.sft.get_alphabet().sort_key(self.cycle.get_letters()))

    def __eq__(self, other):
        return isinstance(other, PeriodicOrbit) and self.sft == other.sft and self.cycle == other.cycle

    def __hash__(self):
        return hash(self.cycle)

    def __str__(self):
        return str(self.cycle)

    def __repr__(self):
        return "PeriodicOrbit({!r})".format(str(self.cycle))

    def to_document(self):
        return {"cycle": list(self.cycle.get_letters()), "period": self.get_period()}
