"""
Decides whether a degree sequence belongs to a simple (pseudo)line arrangement graph and builds a witness.

A sequence with only 2s, 3s and 4s is accepted when, with n = d2 + d3 / 2 lines, d4 = n(n - 5)/2 + d2,
3 <= d2 <= n, and d2 = n only for odd n.
"""
from .exceptions import ConstructionError, InvalidSequence
from .geometry import degree_counts, line_operation, pull_operation, star_construction

from collections import Counter
from dataclasses import dataclass
import enum
import logging
import re

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r'[^\s,]+')
_POWER = re.compile(r'^(\d+)(?:\^(\d+))?$')

@dataclass(frozen=True)
class DegreeSequence:
    entries: tuple
    """ Non-increasing positive degrees. """

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise InvalidSequence('a degree sequence needs at least one entry')
        for position, entry in enumerate(entries):
            if not isinstance(entry, int) or entry < 1:
                raise InvalidSequence('entry %r at position %d is not a positive integer' % (entry, position), position)
            if position and entry > entries[position - 1]:
                raise InvalidSequence('entries must be non-increasing (position %d)' % position, position)
        object.__setattr__(self, 'entries', entries)

    @classmethod
    def of(cls, degrees):
        """ Sorts any iterable of degrees into a sequence. """
        return cls(tuple(sorted((int(d) for d in degrees), reverse=True)))

    @classmethod
    def from_counts(cls, counts):
        return cls.of(degree for degree, count in counts.items() for _ in range(count))

    @classmethod
    def parse(cls, text):
        """
        Reads comma or space separated degrees; 'd^k' repeats d k times. The input may be in any order.
        """
        degrees = []
        for position, match in enumerate(_TOKEN.finditer(text)):
            token = _POWER.match(match.group())
            if not token:
                raise InvalidSequence('cannot read %r at character %d' % (match.group(), match.start()), match.start())
            degree = int(token.group(1))
            if degree < 1:
                raise InvalidSequence('degree %d at character %d is not positive' % (degree, match.start()), match.start())
            degrees.extend([degree] * int(token.group(2) or 1))
        if not degrees:
            raise InvalidSequence('empty degree sequence')
        return cls.of(degrees)

    @property
    def counts(self):
        return Counter(self.entries)

    def d(self, degree):
        return self.counts.get(degree, 0)

    @property
    def d2(self):
        return self.d(2)

    @property
    def d3(self):
        return self.d(3)

    @property
    def d4(self):
        return self.d(4)

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        parts = []
        for degree, count in sorted(self.counts.items(), reverse=True):
            parts.append(str(degree) if count == 1 else '%d^%d' % (degree, count))
        return '<%s>' % ', '.join(parts)

class RejectionCode (enum.Enum):
    NOT_234_DEGREES = 'NOT_234_DEGREES'
    COUNT_IDENTITY_FAIL = 'COUNT_IDENTITY_FAIL'
    D2_RANGE = 'D2_RANGE'
    PARITY = 'PARITY'

@dataclass(frozen=True)
class Rejection:
    code: RejectionCode
    message: str
    accepted = False

@dataclass(frozen=True)
class RealizationPlan:
    n: int
    d2: int
    d3: int
    d4: int
    parity_branch: str
    """ 'odd' builds a star on d2 lines, 'even' a star on d2 + 1 lines followed by one pull. """

    k: int
    """ Number of line operations after the star (and pull). """

    accepted = True

    @property
    def star_size(self):
        return self.d2 if self.parity_branch == 'odd' else self.d2 + 1

    @property
    def pulls(self):
        return 0 if self.parity_branch == 'odd' else 1

    @property
    def sequence(self):
        return DegreeSequence.from_counts({4: self.d4, 3: self.d3, 2: self.d2})

    @classmethod
    def for_lines(cls, n, d2):
        branch = 'odd' if d2 % 2 else 'even'
        k = n - d2 if branch == 'odd' else n - d2 - 1
        return cls(n, d2, 2 * (n - d2), n * (n - 5) // 2 + d2, branch, k)

def check_sequence(pi):
    """
    Returns a RealizationPlan when pi is the degree sequence of some simple arrangement graph,
    and a Rejection naming the first failed condition otherwise.
    """
    if not isinstance(pi, DegreeSequence):
        pi = DegreeSequence.of(pi)
    others = sorted(set(pi.entries) - {2, 3, 4}, reverse=True)
    if others:
        return Rejection(RejectionCode.NOT_234_DEGREES, 'degree %d cannot occur; arrangement graphs only have degrees 2, 3 and 4' % others[0])
    d2, d3, d4 = pi.d2, pi.d3, pi.d4
    if d3 % 2:
        return Rejection(RejectionCode.COUNT_IDENTITY_FAIL, 'd3 = %d is odd, but 2*d2 + d3 = 2n forces it even' % d3)
    n = d2 + d3 // 2
    if d4 != n * (n - 5) // 2 + d2:
        return Rejection(RejectionCode.COUNT_IDENTITY_FAIL, 'with n = %d lines d4 must be %d, got %d' % (n, n * (n - 5) // 2 + d2, d4))
    if not 3 <= d2 <= n:
        return Rejection(RejectionCode.D2_RANGE, 'd2 = %d is outside [3, %d]' % (d2, n))
    if d2 == n and n % 2 == 0:
        return Rejection(RejectionCode.PARITY, 'd2 = n = %d, but d2 = n needs n odd' % n)
    return RealizationPlan.for_lines(n, d2)

def all_plans(n_max):
    """
    Every accepted (n, d2) combination with 3 <= n <= n_max, in increasing order.
    """
    return [RealizationPlan.for_lines(n, d2)
            for n in range(3, n_max + 1)
            for d2 in range(3, n + 1)
            if d2 < n or n % 2]

def accepted_sequences(n):
    return {plan.sequence for plan in all_plans(n) if plan.n == n}

def realize(plan):
    """
    Builds a line arrangement whose graph has the plan's degree sequence: a star, one pull for even d2,
    then k line operations.
    """
    if isinstance(plan, Rejection):
        raise InvalidSequence('cannot realize a rejected sequence: %s' % plan.message)
    A = star_construction(plan.star_size)
    if plan.pulls:
        A = pull_operation(A)
    if plan.k:
        A = line_operation(A, k=plan.k)
    counts = degree_counts(A)
    if DegreeSequence.from_counts(counts) != plan.sequence:
        raise ConstructionError('realization of %s produced %s' % (plan.sequence, DegreeSequence.from_counts(counts)))
    logger.info('realized %s with %d lines', plan.sequence, A.n)
    return A
