# absolute module imports
from advopt.exceptions import IntervalOutOfRangeError, InvalidValueError, BudgetExceededError
from advopt.utils import constants, rationals
from advopt.utils.rationals import INFINITY
from advopt.shifts import Word
from advopt.dynamic import DominanceFrontier, EndpointTable, h_table, forward_costs

class ImprovementCertificate(object):
    """
    A concrete (f, C)-improvement: improved_word agrees with base_word outside [a, b] and
    H_{a,b,v1,v2}(improved) > H_{a,b,v1,v2}(base) + C for every endpoint pair, by at least margin.
    """

    def __init__(self, base_word, interval, improved_word, margin, C, base_table, improved_table):
        """
        Args:
            base_word       - Word on [a - 1, b + 1].
            interval        - (a, b).
            improved_word   - Word on [a - 1, b + 1].
            margin          - min over endpoint pairs of H(improved) - H(base), minus C.
            C               - The improvement threshold.
            base_table      - EndpointTable of the base on [a, b].
            improved_table  - EndpointTable of the improved word on [a, b].
        """
        self.base_word = base_word
        self.interval = tuple(interval)
        self.improved_word = improved_word
        self.margin = margin
        self.C = C
        self.base_table = base_table
        self.improved_table = improved_table

    def get_base_word(self):
        return self.base_word

    def get_interval(self):
        return self.interval

    def get_improved_word(self):
        return self.improved_word

    def get_margin(self):
        return self.margin

    def get_base_table(self):
        return self.base_table

    def get_improved_table(self):
        return self.improved_table

    def validate(self, y_sft, x_sft, p):
        """
        Re-validates the certificate by recomputing both endpoint tables from scratch.

        Returns:
            True if the improved word is legal, agrees with the base outside the interval, and beats the base by more
            than C on every endpoint pair with the recorded margin.
        """
        a, b = self.interval
        start, end = a - 1, b + 1
        if not (self.base_word.covers(start, end) and self.improved_word.covers(start, end)):
            return False
        if not y_sft.is_legal(self.improved_word.restrict(start, end)):
            return False
        if self.base_word.letter_at(start) != self.improved_word.letter_at(start):
            return False
        if self.base_word.letter_at(end) != self.improved_word.letter_at(end):
            return False

        base = h_table(x_sft, p, self.base_word.restrict(a, b))
        improved = h_table(x_sft, p, self.improved_word.restrict(a, b))
        if base.pairs() != improved.pairs():
            return False
        margin = min(improved.get(*pair) - base.get(*pair) for pair in base.pairs()) - self.C
        return margin > 0 and margin == self.margin

    def __repr__(self):
        return "ImprovementCertificate(interval={}, improved={}, margin={})".format(list(self.interval),
                self.improved_word, rationals.format_rational(self.margin))

    def to_document(self):
        return {
            "interval": list(self.interval),
            "base_word": str(self.base_word),
            "improved_word": str(self.improved_word),
            "start_index": self.base_word.get_start_index(),
            "margin": rationals.format_rational(self.margin),
            "C": rationals.format_rational(self.C),
            "base_table": self.base_table.to_document(),
            "improved_table": self.improved_table.to_document(),
        }

class ImprovementSearch(object):
    """
    Searches replacement words for (f, C)-improvements, caching results by (left letter, segment, right letter).

    Only the boundary letters y(a - 1), y(b + 1) and the segment y|_a^b matter for a one-step Y, so the cache is shared
    by every interval and every base word.
    """

    def __init__(self, y_sft, x_sft, p, C, budget = None):
        """
        Args:
            y_sft           - The Y Sft.
            x_sft           - The X Sft.
            p               - The Potential.
            C               - Nonnegative rational threshold.
            budget          - Cap on replacement words per search, default from constants.get_word_budget.
        """
        self.C = rationals.parse_rational(C, "C")
        if self.C < 0:
            raise InvalidValueError("C", C, "a nonnegative rational")
        self.y_sft = y_sft
        self.x_sft = x_sft
        self.p = p
        self.rows = p.aligned(x_sft.get_alphabet(), y_sft.get_alphabet()).rows
        self.budget = constants.get_word_budget() if budget is None else budget
        self.cache = {}

    def get_C(self):
        return self.C

    def _endpoint_matrix(self, ys):
        return [forward_costs(self.x_sft, self.rows, ys, first=v1) for v1 in range(self.x_sft.num_letters())]

    def _best_replacement(self, left, segment, right):
        """
        Best replacement of segment between the letter indices left and right.

        Returns:
            (margin, letters) of the lexicographically least replacement with the largest margin, or None if the
            segment has no alternative. The margin is exact when positive; a nonpositive margin only says no
            improvement exists.
        """
        y_sft = self.y_sft
        n = self.x_sft.num_letters()
        k = len(segment)
        predecessors = self.x_sft.predecessors
        rows = self.rows

        count = sum(y_sft.adjacency_power(k - 1)[u, v] for u in y_sft.successors[left]
                for v in y_sft.predecessors[right])
        if count > self.budget:
            raise BudgetExceededError("replacement words of length {}".format(k), count, self.budget)

        base = self._endpoint_matrix(segment)
        pairs = [(v1, v2) for v1 in range(n) for v2 in range(n) if base[v1][v2] != INFINITY]

        # reach[r]: Y letters from which r more steps can end before right
        reach = [set(y_sft.predecessors[right])]
        for r in range(1, k):
            reach.append({u for u in range(y_sft.num_letters()) if any(v in reach[r - 1] for v in y_sft.successors[u])})

        states = []
        for j in y_sft.successors[left]:
            if j in reach[k - 1]:
                matrix = tuple(rows[u][j] if u == v1 else INFINITY for v1 in range(n) for u in range(n))
                states.append(((j,), matrix))

        for level in range(1, k):
            frontiers = {}
            for prefix, matrix in states:
                for j in y_sft.successors[prefix[-1]]:
                    if j not in reach[k - 1 - level]:
                        continue
                    extended = tuple(min([matrix[v1 * n + u] for u in predecessors[v]], default=INFINITY) + rows[v][j]
                            for v1 in range(n) for v in range(n))
                    frontiers.setdefault(j, DominanceFrontier()).offer(extended, prefix + (j,))
            states = sorted(((payload, vector) for frontier in frontiers.values()
                    for vector, payload in frontier.get_entries()), key=lambda state: state[0])

        best = None
        for prefix, matrix in states:
            if prefix == segment:
                continue
            margin = min(matrix[v1 * n + v2] - base[v1][v2] for v1, v2 in pairs) - self.C
            if best is None or margin > best[0]:
                best = (margin, prefix)
        return best

    def search(self, left, segment, right):
        """
        Looks up or computes the best replacement for a segment.

        Args:
            left, right     - Boundary Y letters.
            segment         - Tuple of Y letters.

        Returns:
            (margin, letters) of the best replacement, or None.
        """
        alphabet = self.y_sft.get_alphabet()
        key = (alphabet.index(left), alphabet.to_indices(segment), alphabet.index(right))
        if key not in self.cache:
            best = self._best_replacement(*key)
            self.cache[key] = None if best is None else (best[0], alphabet.to_letters(best[1]))
        return self.cache[key]

    def find(self, base, a, b):
        """
        Finds the (f, C)-improvement of base on [a, b] with the largest margin, ties broken by the lexicographically
        least improved word.

        Args:
            base            - A legal Y Word covering [a - 1, b + 1].
            a, b            - The interval.

        Returns:
            ImprovementCertificate or None.
        """
        if a > b or not base.covers(a - 1, b + 1):
            raise IntervalOutOfRangeError((a, b), (base.get_start_index(), base.get_end_index()))
        self.y_sft.check_legal(base, "base word")

        window = base.restrict(a - 1, b + 1)
        letters = window.get_letters()
        found = self.search(letters[0], letters[1:-1], letters[-1])
        if found is None or found[0] <= 0:
            return None

        margin, replacement = found
        improved = window.replace(a, replacement)
        return ImprovementCertificate(window, (a, b), improved, margin, self.C,
                h_table(self.x_sft, self.p, window.restrict(a, b)), h_table(self.x_sft, self.p, improved.restrict(a, b)))

def find_improvement(y_sft, x_sft, p, base, interval, C, budget = None):
    """
    Searches every legal replacement of base on interval = [a, b] that keeps y(a - 1) and y(b + 1), for one that is
    an (f, C)-improvement.

    Args:
        y_sft               - The Y Sft.
        x_sft               - The X Sft.
        p                   - The Potential.
        base                - A legal Y Word covering [a - 1, b + 1].
        interval            - (a, b).
        C                   - Nonnegative rational threshold.

    Returns:
        The ImprovementCertificate with the largest margin (ties: lexicographically least improved word), or None.
        Raises IntervalOutOfRangeError if base does not cover [a - 1, b + 1].
    """
    a, b = interval
    return ImprovementSearch(y_sft, x_sft, p, C, budget).find(base, a, b)
