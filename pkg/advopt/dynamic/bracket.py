# absolute module imports
from advopt.exceptions import InconsistencyError
from advopt.utils import rationals

class Bracket(object):
    """
    A certified interval [lo, hi] enclosing a functional value, with the witnesses that produced each bound.
    """

    def __init__(self, lo, hi, lo_witness = None, hi_witness = None, degraded = False, table = None):
        """
        Creates a new Bracket.

        Args:
            lo, hi          - Exact rational bounds.
            lo_witness      - Dict describing what produced lo.
            hi_witness      - Dict describing what produced hi.
            degraded        - Set when a constant had to be enlarged beyond its proven value.
            table           - Optional list of per-horizon rows for reports.

        Returns:
            A new Bracket. Raises InconsistencyError if lo > hi.
        """
        if lo > hi:
            raise InconsistencyError("lower bound {} exceeds upper bound {} (lower from {}, upper from {})".format(
                    rationals.format_rational(lo), rationals.format_rational(hi), lo_witness, hi_witness))
        self.lo = rationals.normalize(lo)
        self.hi = rationals.normalize(hi)
        self.lo_witness = dict(lo_witness or {})
        self.hi_witness = dict(hi_witness or {})
        self.degraded = degraded
        self.table = list(table or [])

    def get_lo(self):
        return self.lo

    def get_hi(self):
        return self.hi

    def width(self):
        return self.hi - self.lo

    def is_point(self):
        return self.lo == self.hi

    def contains(self, value):
        return self.lo <= value <= self.hi

    def intersect(self, other):
        """
        Gets the intersection with another Bracket, keeping the witnesses of the tighter bounds.

        Raises InconsistencyError if the brackets are disjoint.
        """
        if self.lo >= other.lo:
            lo, lo_witness = self.lo, self.lo_witness
        else:
            lo, lo_witness = other.lo, other.lo_witness
        if self.hi <= other.hi:
            hi, hi_witness = self.hi, self.hi_witness
        else:
            hi, hi_witness = other.hi, other.hi_witness
        return Bracket(lo, hi, lo_witness, hi_witness, self.degraded or other.degraded, self.table + other.table)

    def __eq__(self, other):
        return isinstance(other, Bracket) and self.lo == other.lo and self.hi == other.hi

    def __repr__(self):
        return "Bracket[{}, {}]".format(rationals.format_rational(self.lo), rationals.format_rational(self.hi))

    def to_document(self):
        return {
            "lo": rationals.format_rational(self.lo),
            "hi": rationals.format_rational(self.hi),
            "lo_decimal_non_authoritative": rationals.format_decimal(self.lo),
            "hi_decimal_non_authoritative": rationals.format_decimal(self.hi),
            "lo_witness": rationals.to_plain(self.lo_witness),
            "hi_witness": rationals.to_plain(self.hi_witness),
            "degraded": self.degraded,
        }
