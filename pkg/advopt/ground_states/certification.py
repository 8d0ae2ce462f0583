# absolute module imports
from advopt.exceptions import InvalidValueError, BudgetExceededError
from advopt.utils import constants, rationals
from advopt.utils.system import log, Color
from advopt.shifts import Word
from advopt.cycles import psi_periodic

# local module imports
from .improvement import ImprovementSearch

CERTIFIED = "certified"
REFUTED = "refuted"

class WindowCertificate(object):
    """
    Result of checking a periodic orbit for (f, C)-improvements on every interval of length at most W.

    A certified status is only a bounded-window statement. A refuted status carries the ImprovementCertificate found.
    """

    def __init__(self, orbit, C, window, status, interval = None, certificate = None):
        self.orbit = orbit
        self.C = C
        self.window = window
        self.status = status
        self.interval = interval
        self.certificate = certificate

    def get_orbit(self):
        return self.orbit

    def get_C(self):
        return self.C

    def get_window(self):
        return self.window

    def get_status(self):
        return self.status

    def get_interval(self):
        return self.interval

    def get_certificate(self):
        return self.certificate

    def is_certified(self):
        return self.status == CERTIFIED

    def __repr__(self):
        if self.is_certified():
            return "WindowCertificate({}, certified up to {})".format(self.orbit, self.window)
        return "WindowCertificate({}, refuted on {})".format(self.orbit, list(self.interval))

    def to_document(self):
        document = {
            "orbit": self.orbit.to_document(),
            "C": rationals.format_rational(self.C),
            "window": self.window,
            "status": "certified-up-to-{}".format(self.window) if self.is_certified() else REFUTED,
        }
        if not self.is_certified():
            document["interval"] = list(self.interval)
            document["certificate"] = self.certificate.to_document()
        return document

def certify_orbit(y_orbit, x_sft, p, C, W, search = None, budget = None):
    """
    Checks every interval of length at most W starting within one period of y_orbit for an (f, C)-improvement.

    Intervals are tried by length, then by start, so a refutation reports the shortest improvable interval.

    Args:
        y_orbit             - PeriodicOrbit of Y.
        x_sft               - The X Sft.
        p                   - The Potential.
        C                   - Nonnegative rational.
        W                   - Largest interval length, at least 1.
        search              - ImprovementSearch to share a cache with, or None to make one.

    Returns:
        WindowCertificate.
    """
    if W < 1:
        raise InvalidValueError("W", W, "at least 1")
    y_sft = y_orbit.get_sft()
    if search is None:
        search = ImprovementSearch(y_sft, x_sft, p, C, budget)
    C = search.get_C()

    for length in range(1, W + 1):
        for a in range(y_orbit.get_period()):
            b = a + length - 1
            certificate = search.find(y_orbit.window(a - 1, b + 1), a, b)
            if certificate is not None:
                return WindowCertificate(y_orbit, C, W, REFUTED, (a, b), certificate)
    return WindowCertificate(y_orbit, C, W, CERTIFIED)

def _improvable(search, extended):
    start, end = extended.get_start_index(), extended.get_end_index()
    for length in range(1, end - start):
        for a in range(start + 1, end - length + 1):
            if search.find(extended, a, a + length - 1) is not None:
                return True
    return False

def forbidden_words(y_sft, x_sft, p, C, n, context, candidates = None, budget = None, search = None, logging = False):
    """
    Finds words of length n that cannot occur in Y_{f,C}: every legal extension of the word by context letters on each
    side has an (f, C)-improvement on some interval strictly inside the extension.

    The result is sound but not complete; a longer context can only find more words.

    Args:
        y_sft               - The Y Sft.
        x_sft               - The X Sft.
        p                   - The Potential.
        C                   - Nonnegative rational.
        n                   - Word length, at least 1.
        context             - Letters added on each side, at least 1.
        candidates          - Words (or letter sequences) of length n to test. Default every legal word of length n.
        budget              - Cap on candidates, on extensions per candidate and on replacement words per search.
        search              - ImprovementSearch to share a cache with, or None to make one.
        logging             - Print progress.

    Returns:
        Set of Words on [0, n - 1].
    """
    if n < 1:
        raise InvalidValueError("n", n, "at least 1")
    if context < 1:
        raise InvalidValueError("context", context, "at least 1")
    budget = constants.get_word_budget() if budget is None else budget
    if search is None:
        search = ImprovementSearch(y_sft, x_sft, p, C, budget)

    if candidates is None:
        candidates = y_sft.enumerate_words(n, 0, budget)
    else:
        candidates = [Word(tuple(candidate), 0) for candidate in candidates]

    found = set()
    for candidate in candidates:
        if len(candidate) != n:
            raise InvalidValueError("candidate", candidate, "a word of length {}".format(n))
        y_sft.check_legal(candidate, "candidate")
        letters = candidate.get_letters()

        lefts = list(y_sft.enumerate_bridges(context, None, letters[0]))
        rights = list(y_sft.enumerate_bridges(context, letters[-1], None))
        if len(lefts) * len(rights) > budget:
            raise BudgetExceededError("extensions of '{}'".format(candidate), len(lefts) * len(rights), budget)

        forbidden = True
        for left in lefts:
            for right in rights:
                extended = Word(left.get_letters() + letters + right.get_letters(), -context)
                if not _improvable(search, extended):
                    forbidden = False
                    break
            if not forbidden:
                break

        if forbidden:
            log(logging, "Word {} is forbidden in the ground-state shift.".format(candidate), color=Color.YELLOW)
            found.add(candidate)
    return found

def periodic_maximizer_search(x_sft, y_sft, p, C, max_period, W, karp_limit = None, howard_max_iterations = None,
        budget = None, logging = False):
    """
    Searches the periodic orbits of Y up to max_period for a candidate alpha-maximizing orbit: among the orbits that
    certify_orbit passes at window W, the one with the largest psi.

    Passing at a finite W is necessary but not sufficient for lying in Y_{f,C}, so the result is a candidate.

    Returns:
        (PeriodicOrbit, PsiValue) of the first orbit, by period then canonical word, with the largest psi, or None if
        no orbit is certified.
    """
    search = ImprovementSearch(y_sft, x_sft, p, C, budget)
    best = None
    for orbit in y_sft.enumerate_periodic_orbits(max_period, budget):
        certificate = certify_orbit(orbit, x_sft, p, C, W, search=search)
        if not certificate.is_certified():
            log(logging, "Orbit {} refuted on {}.".format(orbit, list(certificate.get_interval())))
            continue
        psi = psi_periodic(x_sft, p, orbit, karp_limit, howard_max_iterations)
        log(logging, "Orbit {} certified up to {}, psi = {}.".format(orbit, W, rationals.format_rational(psi.get_value())))
        if best is None or psi.get_value() > best[1].get_value():
            best = (orbit, psi)
    return best
