# external package imports
import numpy as np

# absolute module imports
from advopt.exceptions import EmptyShiftError, InvalidInputError, InvalidValueError, BudgetExceededError
from advopt.utils import constants

# local module imports
from .alphabet import Alphabet
from .word import Word

class Sft(object):
    """
    A one-step shift of finite type in vertex-shift form: letters are vertices and allowed pairs (u, v) are edges
    meaning v may follow u.

    Letters that do not lie on a bi-infinite path are pruned on construction, so every remaining letter has at least
    one allowed successor and one allowed predecessor.
    """

    def __init__(self, letters, allowed, name = "shift", recoding_map = None):
        """
        Creates a new Sft.

        Args:
            letters         - Ordered iterable of letters.
            allowed         - Iterable of (u, v) letter pairs.
            name            - Name used in error messages and reports.
            recoding_map    - The RecodingMap this Sft is the image of, if it was built by recoding.

        Returns:
            A new Sft. Raises EmptyShiftError if pruning removes every letter.
        """
        self.name = name
        self.recoding_map = recoding_map

        source_alphabet = Alphabet(letters, name)
        pairs = set()
        for u, v in allowed:
            pairs.add((source_alphabet.letter(source_alphabet.index(u)), source_alphabet.letter(source_alphabet.index(v))))

        alive = set(source_alphabet.get_letters())
        changed = True
        while changed:
            changed = False
            has_successor = {u for u, v in pairs if u in alive and v in alive}
            has_predecessor = {v for u, v in pairs if u in alive and v in alive}
            survivors = alive & has_successor & has_predecessor
            if survivors != alive:
                alive = survivors
                changed = True

        if len(alive) == 0:
            raise EmptyShiftError(name)

        self.alphabet = Alphabet([letter for letter in source_alphabet if letter in alive], name)
        self.allowed = frozenset((u, v) for u, v in pairs if u in alive and v in alive)

        n = len(self.alphabet)
        successors = [[] for i in range(n)]
        predecessors = [[] for i in range(n)]
        for u, v in self.allowed:
            successors[self.alphabet.index(u)].append(self.alphabet.index(v))
            predecessors[self.alphabet.index(v)].append(self.alphabet.index(u))

        # sorted so that depth first enumeration visits words in lexicographic order
        self.successors = tuple(tuple(sorted(row)) for row in successors)
        self.predecessors = tuple(tuple(sorted(row)) for row in predecessors)

        self._transitivity = {}

    def get_name(self):
        return self.name

    def get_alphabet(self):
        return self.alphabet

    def get_letters(self):
        return self.alphabet.get_letters()

    def get_allowed(self):
        return self.allowed

    def get_recoding_map(self):
        return self.recoding_map

    def num_letters(self):
        return len(self.alphabet)

    def num_edges(self):
        return len(self.allowed)

    def is_allowed(self, u, v):
        return (u, v) in self.allowed

    def center_letter(self, letter):
        """
        Gets the source letter at the center of a block letter, or the letter itself if this Sft was not recoded.
        """
        if self.recoding_map is None:
            return letter
        return self.recoding_map.center_letter(letter)

    def is_legal(self, word):
        """
        Checks that every letter of word is in this Sft and consecutive letters are allowed.

        Args:
            word            - A Word or a letter sequence.

        Returns:
            True if word is legal.
        """
        letters = tuple(word)
        if any(letter not in self.alphabet for letter in letters):
            return False
        return all((letters[i], letters[i + 1]) in self.allowed for i in range(len(letters) - 1))

    def check_legal(self, word, what = "word"):
        if not self.is_legal(word):
            raise InvalidInputError("{} '{}' is not legal in shift '{}'".format(what, word, self.name))

    def adjacency_matrix(self):
        """
        Gets the 0/1 transition matrix as an exact integer numpy array.

        Returns:
            numpy array of dtype object, entry (i, j) is 1 iff letter j may follow letter i.
        """
        n = len(self.alphabet)
        matrix = np.zeros((n, n), dtype=object)
        for i, row in enumerate(self.successors):
            for j in row:
                matrix[i, j] = 1
        return matrix

    def adjacency_power(self, exponent):
        """
        Gets the exponent-th power of the transition matrix with exact integer entries.
        """
        n = len(self.alphabet)
        result = np.identity(n, dtype=object)
        base = self.adjacency_matrix()
        while exponent > 0:
            if exponent & 1:
                result = result.dot(base)
            base = base.dot(base)
            exponent >>= 1
        return result

    def count_words(self, k):
        """
        Counts the legal words of length k, the sum of the entries of the (k-1)-th transition matrix power.
        """
        if k < 1:
            raise InvalidValueError("k", k, "at least 1")
        return int(self.adjacency_power(k - 1).sum())

    def transitivity_constant(self, cap = None):
        """
        Gets the smallest D such that for every ordered letter pair (u, v) and every n >= D there is a legal path of
        length n from u to v.

        Every letter has a predecessor, so once all entries of the D-th transition matrix power are positive every
        higher power stays positive; D is therefore the primitivity index of the transition matrix.

        Args:
            cap             - Largest D to try. Default 4 * (number of letters)^2.

        Returns:
            D, or None if the shift is not certified transitive within cap.
        """
        if cap is None:
            cap = constants.default_transitivity_cap(len(self.alphabet))
        if cap < 1:
            raise InvalidValueError("cap", cap, "at least 1")
        if cap in self._transitivity:
            return self._transitivity[cap]

        base = self.adjacency_matrix().astype(bool)
        power = base.copy()
        answer = None
        for exponent in range(1, cap + 1):
            if power.all():
                answer = exponent
                break
            power = (power.astype(np.int64) @ base.astype(np.int64)) > 0

        self._transitivity[cap] = answer
        return answer

    def _enumerate(self, length, first_choices, last_allowed):
        """
        Depth first enumeration of letter index tuples of the given length, in lexicographic order.

        Args:
            length          - Word length, at least 1.
            first_choices   - Letter indices allowed at the first position.
            last_allowed    - Set of letter indices allowed at the last position, or None for any.

        Yields:
            Tuples of letter indices.
        """
        # reach[r] is the set of letters from which some path of r more steps ends in last_allowed
        reach = [set(range(len(self.alphabet))) if last_allowed is None else set(last_allowed)]
        for r in range(1, length):
            reach.append({u for u in range(len(self.alphabet))
                    if any(v in reach[r - 1] for v in self.successors[u])})

        stack = [(u,) for u in reversed(first_choices) if u in reach[length - 1]]
        while stack:
            prefix = stack.pop()
            if len(prefix) == length:
                yield prefix
                continue
            remaining = length - len(prefix) - 1
            for v in reversed(self.successors[prefix[-1]]):
                if v in reach[remaining]:
                    stack.append(prefix + (v,))

    def enumerate_words(self, k, start_index = 0, budget = None):
        """
        Streams the legal words of length k in lexicographic order.

        Args:
            k               - Word length, at least 1.
            start_index     - Position of the first letter of every produced Word.
            budget          - Maximum number of words allowed. If None, no check is made.

        Yields:
            Words.
        """
        if k < 1:
            raise InvalidValueError("k", k, "at least 1")
        if budget is not None:
            count = self.count_words(k)
            if count > budget:
                raise BudgetExceededError("words of length {} in '{}'".format(k, self.name), count, budget)
        for indices in self._enumerate(k, range(len(self.alphabet)), None):
            yield Word(self.alphabet.to_letters(indices), start_index)

    def enumerate_bridges(self, length, left = None, right = None, start_index = 0):
        """
        Streams, in lexicographic order, the legal words of the given length that may follow the letter left and
        precede the letter right.

        Args:
            length          - Word length, at least 1.
            left            - Letter the word must be allowed to follow, or None.
            right           - Letter the word must be allowed to precede, or None.
            start_index     - Position of the first letter of every produced Word.

        Yields:
            Words.
        """
        if length < 1:
            raise InvalidValueError("length", length, "at least 1")
        if left is None:
            first = range(len(self.alphabet))
        else:
            first = self.successors[self.alphabet.index(left)]
        last = None if right is None else set(self.predecessors[self.alphabet.index(right)])
        for indices in self._enumerate(length, first, last):
            yield Word(self.alphabet.to_letters(indices), start_index)

    def enumerate_periodic_orbits(self, max_period, budget = None):
        """
        Lists every primitive periodic orbit of period at most max_period.

        Orbits are listed by period, then by the lexicographic order of their canonical rotation. A closed walk is
        kept exactly when it is a Lyndon word for the alphabet order, which makes it both primitive and its own least
        rotation.

        Args:
            max_period      - Largest period, at least 1.
            budget          - Maximum number of closed walks to visit per period. If None, no check is made.

        Returns:
            List of PeriodicOrbit.
        """
        from .orbit import PeriodicOrbit, is_lyndon

        if max_period < 1:
            raise InvalidValueError("max_period", max_period, "at least 1")

        orbits = []
        for period in range(1, max_period + 1):
            if budget is not None:
                count = int(np.trace(self.adjacency_power(period)))
                if count > budget:
                    raise BudgetExceededError("closed walks of period {} in '{}'".format(period, self.name), count,
                            budget)
            for start in range(len(self.alphabet)):
                # a Lyndon word starts with its least letter, so later letters are never below start
                for indices in self._enumerate(period, [start], set(self.predecessors[start])):
                    if min(indices) == start and is_lyndon(indices):
                        orbits.append(PeriodicOrbit(self, self.alphabet.to_letters(indices), canonical = True))
        return orbits

    def __eq__(self, other):
        return (isinstance(other, Sft) and self.alphabet == other.alphabet and self.allowed == other.allowed)

    def __hash__(self):
        return hash((self.alphabet, self.allowed))

    def __repr__(self):
        return "Sft(name={!r}, letters={}, edges={})".format(self.name, list(self.get_letters()), len(self.allowed))

    def to_document(self):
        order = self.alphabet.sort_key
        return {
            "letters": list(self.get_letters()),
            "allowed": [list(pair) for pair in sorted(self.allowed, key=order)],
        }
