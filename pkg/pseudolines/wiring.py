"""
Wiring diagrams: simple pseudoline arrangements encoded as sequences of adjacent wire swaps.

Levels and swap positions are 1 based with level 1 at the bottom. Swap position p exchanges
the wires currently at levels p and p + 1.
"""
from .conf import get_setting
from .exceptions import EnumerationRangeError, InvalidDiagram

from dataclasses import dataclass
from math import factorial
import heapq
import logging
import operator
import re

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class WiringDiagram:
    n: int
    """ Number of wires (pseudolines), labelled 1..n from bottom to top at the left end. """

    swaps: tuple
    """ Swap positions in sweep order, each in [1, n-1]. """

    def __post_init__(self):
        object.__setattr__(self, 'swaps', tuple(operator.index(p) for p in self.swaps))

    @property
    def expected_length(self):
        return self.n * (self.n - 1) // 2

    def __str__(self):
        return '%d: %s' % (self.n, ' '.join(str(p) for p in self.swaps))

@dataclass(frozen=True)
class SweepState:
    step: int
    """ Number of swaps applied so far (0 is the identity). """

    levels: tuple
    """ levels[k] is the wire at level k + 1. """

    def level_of(self, wire):
        return self.levels.index(wire) + 1

@dataclass(frozen=True)
class Crossing:
    step: int
    position: int
    pair: tuple
    """ The two wires exchanged, smaller label first. """

@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    step: int = None
    pair: tuple = None

@dataclass(frozen=True)
class ValidationReport:
    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    @property
    def first(self):
        return self.violations[0] if self.violations else None

def validate(d):
    """
    Checks that every pair of wires is exchanged exactly once and that the swaps reverse the wire order.
    Returns a ValidationReport; nothing is raised for a bad diagram.
    """
    if d.n < 3:
        return ValidationReport((Violation('wire-count', 'a wiring diagram needs at least 3 wires, got %d' % d.n),))
    violations = []
    levels = list(range(1, d.n + 1))
    seen = set()
    for step, position in enumerate(d.swaps, start=1):
        if not 1 <= position < d.n:
            violations.append(Violation('position', 'step %d: position %d is outside [1, %d]' % (step, position, d.n - 1), step=step))
            break
        lower, upper = levels[position - 1], levels[position]
        pair = (min(lower, upper), max(lower, upper))
        if pair in seen:
            violations.append(Violation('double-swap', 'pair %s swapped twice at step %d' % (pair, step), step=step, pair=pair))
            break
        seen.add(pair)
        levels[position - 1], levels[position] = upper, lower
    else:
        if len(d.swaps) != d.expected_length:
            violations.append(Violation('length', 'expected %d swaps, got %d' % (d.expected_length, len(d.swaps))))
        missing = [(i, j) for i in range(1, d.n + 1) for j in range(i + 1, d.n + 1) if (i, j) not in seen]
        if missing:
            violations.append(Violation('uncrossed', 'pair %s never swapped' % (missing[0],), pair=missing[0]))
    return ValidationReport(tuple(violations))

def ensure_valid(d):
    report = validate(d)
    if not report.ok:
        raise InvalidDiagram(report.first.message)
    return d

def states(d):
    """
    Yields the allowable sequence of the diagram: the level assignment before the first swap and after every swap.
    """
    levels = list(range(1, d.n + 1))
    yield SweepState(0, tuple(levels))
    for step, position in enumerate(d.swaps, start=1):
        levels[position - 1], levels[position] = levels[position], levels[position - 1]
        yield SweepState(step, tuple(levels))

def crossings(d):
    result = []
    levels = list(range(1, d.n + 1))
    for step, position in enumerate(d.swaps, start=1):
        lower, upper = levels[position - 1], levels[position]
        result.append(Crossing(step, position, (min(lower, upper), max(lower, upper))))
        levels[position - 1], levels[position] = upper, lower
    return result

_TEXT_FORM = re.compile(r'^\s*(\d+)\s*:\s*((?:\d+\s*)*)$')

def parse_text(text):
    """
    Parses the plain-text form 'n: s1 s2 ... s_m'.
    """
    match = _TEXT_FORM.match(text)
    if not match:
        raise InvalidDiagram("expected 'n: s1 s2 ...', got %r" % text.strip())
    return WiringDiagram(int(match.group(1)), tuple(int(p) for p in match.group(2).split()))

def count_all(n):
    """
    Number of simple wiring diagrams on n wires (reduced words of the longest permutation),
    from the hook-length style product formula. Used to cross-check the enumerator.
    """
    if n < 1:
        return 0
    denominator = 1
    for k in range(1, n):
        denominator *= (2 * k - 1) ** (n - k)
    return factorial(n * (n - 1) // 2) // denominator

def _check_range(n, allow_large):
    if not 3 <= n <= 6:
        raise EnumerationRangeError('enumeration supports 3 <= n <= 6, got %d' % n)
    if allow_large is None:
        allow_large = get_setting('PSEUDOLINES_ALLOW_N6')
    if n > get_setting('PSEUDOLINES_MAX_ENUMERATION_N') and not allow_large:
        raise EnumerationRangeError('n = %d is expensive to enumerate; pass allow_large=True (or set PSEUDOLINES_ALLOW_N6) to opt in' % n)

def enumerate_all(n, prefix=(), allow_large=None):
    """
    Yields every simple wiring diagram on n wires whose swaps start with 'prefix', exactly once and
    in lexicographic order of the swap list.
    """
    _check_range(n, allow_large)
    levels = list(range(1, n + 1))
    for step, position in enumerate(prefix, start=1):
        if not 1 <= position < n or levels[position - 1] > levels[position]:
            raise InvalidDiagram('prefix %s is not the start of a simple wiring diagram (step %d)' % (tuple(prefix), step))
        levels[position - 1], levels[position] = levels[position], levels[position - 1]
    swaps = list(prefix)
    total = n * (n - 1) // 2

    def extend():
        if len(swaps) == total:
            yield WiringDiagram(n, tuple(swaps))
            return
        for position in range(1, n):
            # A pair still in increasing order has not crossed yet
            if levels[position - 1] < levels[position]:
                levels[position - 1], levels[position] = levels[position], levels[position - 1]
                swaps.append(position)
                yield from extend()
                swaps.pop()
                levels[position - 1], levels[position] = levels[position], levels[position - 1]

    return extend()

def first_swap_prefixes(n):
    return [(position,) for position in range(1, n)]

def _end_vertex(g, line, sign):
    order = g.line_orders[line]
    return order[-1] if sign > 0 else order[0]

def two_line_gaps(g):
    """
    Returns the gaps between consecutive line ends at infinity whose unbounded face is bounded by
    exactly two lines, as (gap index, (a, b)) with a < b. The apex a ∩ b of such a face is a 2-vertex.
    """
    ends = g.ends
    gaps = []
    for index, (line, sign) in enumerate(ends):
        other, other_sign = ends[(index + 1) % len(ends)]
        if line == other:
            continue
        apex = _end_vertex(g, line, sign)
        if apex == _end_vertex(g, other, other_sign) and set(apex) == {line, other}:
            gaps.append((index, (min(line, other), max(line, other))))
    return gaps

def topological_sweep(g, start_gap):
    """
    Sweeps an arrangement graph into a wiring diagram whose bottom unbounded face is the face in
    gap 'start_gap' (between g.ends[start_gap] and the next end counter-clockwise).

    The wires are relabelled so that the left ends, read clockwise from the start face, are 1..n.
    Among the crossings that are next on both of their lines, the lowest one is swept first.
    Returns (diagram, relabel) where relabel maps the graph's line ids to wire labels.
    """
    ends = g.ends
    size = len(ends)
    if size != 2 * g.n:
        raise InvalidDiagram('expected %d line ends at infinity, got %d' % (2 * g.n, size))
    relabel = {}
    orders = {}
    for wire in range(1, g.n + 1):
        line, sign = ends[(start_gap - wire + 1) % size]
        if line in relabel:
            raise InvalidDiagram('line %s has both ends on the same side of gap %d' % (line, start_gap))
        relabel[line] = wire
        order = g.line_orders[line]
        orders[line] = tuple(order) if sign < 0 else tuple(reversed(order))
    cursor = {line: 0 for line in orders}
    level_of = {line: relabel[line] for line in orders}
    line_at = {wire: line for line, wire in relabel.items()}

    def is_ready(vertex):
        return all(cursor[line] < len(orders[line]) and orders[line][cursor[line]] == vertex for line in vertex)

    ready = []
    for line in orders:
        vertex = orders[line][0]
        if is_ready(vertex) and line == min(vertex):
            heapq.heappush(ready, (min(level_of[line] for line in vertex), vertex))
    swaps = []
    while ready:
        _, vertex = heapq.heappop(ready)
        a, b = vertex
        low, high = sorted((level_of[a], level_of[b]))
        if high - low != 1:
            raise InvalidDiagram('crossing %s is not between adjacent levels; the line orders do not describe an arrangement' % (vertex,))
        swaps.append(low)
        line_at[low], line_at[high] = line_at[high], line_at[low]
        level_of[line_at[low]], level_of[line_at[high]] = low, high
        for line in vertex:
            cursor[line] += 1
        for line in vertex:
            if cursor[line] < len(orders[line]):
                candidate = orders[line][cursor[line]]
                if is_ready(candidate):
                    heapq.heappush(ready, (min(level_of[l] for l in candidate), candidate))
    if len(swaps) != g.n * (g.n - 1) // 2:
        raise InvalidDiagram('sweep from gap %d stalled after %d crossings' % (start_gap, len(swaps)))
    return WiringDiagram(g.n, tuple(swaps)), relabel

def restricted_start_gap(g):
    """
    An unbounded face bounded by two lines, as its gap index; the smallest line pair wins ties.
    """
    gaps = two_line_gaps(g)
    if not gaps:
        raise InvalidDiagram('arrangement has no unbounded face bounded by two lines')
    return min(gaps, key=lambda item: (item[1], item[0]))[0]

def restricted_sweep(g):
    """
    Returns a wiring diagram of the arrangement with exactly one crossing between the two bottom levels.
    """
    gap = restricted_start_gap(g)
    diagram, _ = topological_sweep(g, gap)
    logger.debug('restricted sweep from gap %d: %s', gap, diagram)
    return diagram
