# absolute module imports
from advopt.utils.rationals import INFINITY

def weakly_dominates(a, b):
    """
    True if a >= b entrywise.
    """
    return all(x >= y for x, y in zip(a, b))

def strictly_dominates(a, b):
    """
    True if a > b on every entry where a is finite, and a has a finite entry.
    """
    finite = False
    for x, y in zip(a, b):
        if x == INFINITY:
            continue
        if not x > y:
            return False
        finite = True
    return finite

class DominanceFrontier(object):
    """
    An antichain of cost vectors for a maximizing search over words.

    Candidates must be offered in lexicographic order of their words. A candidate is dropped when a vector already
    kept (hence lexicographically smaller) weakly dominates it; a kept vector is dropped when a later candidate
    strictly dominates it. Both rules keep the optimal value and its lexicographically least witness, since the
    value of every completion is monotone in the vector.
    """

    def __init__(self):
        self.entries = []

    def offer(self, vector, payload):
        """
        Offers a candidate.

        Args:
            vector          - Tuple of extended rationals.
            payload         - Anything carried along with the vector, usually the word.

        Returns:
            True if the candidate was kept.
        """
        for kept_vector, kept_payload in self.entries:
            if weakly_dominates(kept_vector, vector):
                return False
        self.entries = [(kept_vector, kept_payload) for kept_vector, kept_payload in self.entries
                if not strictly_dominates(vector, kept_vector)]
        self.entries.append((vector, payload))
        return True

    def get_entries(self):
        return list(self.entries)

    def __len__(self):
        return len(self.entries)
