"""
Exact rational line arrangements, and the star, pull and line constructions used to realize degree sequences.

All coordinates are Fractions. A line a*x + b*y = c is oriented along (b, -a); moving along that direction
increases b*x - a*y, which is the order used for a line's crossings.
"""
from .conf import get_setting
from .exceptions import ConstructionError, NonSimpleArrangement, ParallelLinesError

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
import logging
import math

logger = logging.getLogger(__name__)

@dataclass(frozen=True, order=True)
class RationalPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, 'x', Fraction(self.x))
        object.__setattr__(self, 'y', Fraction(self.y))

    def __add__(self, other):
        return RationalPoint(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return RationalPoint(self.x - other.x, self.y - other.y)

    def scaled(self, factor):
        return RationalPoint(self.x * factor, self.y * factor)

@dataclass(frozen=True)
class RationalLine:
    a: int
    b: int
    c: int
    id: int = None
    """ Line label; vertices are named by the sorted pair of the labels of their two lines. """

    def __post_init__(self):
        a, b, c = int(self.a), int(self.b), int(self.c)
        if a == 0 and b == 0:
            raise ValueError('a line needs (a, b) != (0, 0)')
        divisor = math.gcd(math.gcd(a, b), c)
        if a < 0 or (a == 0 and b < 0):
            divisor = -divisor
        object.__setattr__(self, 'a', a // divisor)
        object.__setattr__(self, 'b', b // divisor)
        object.__setattr__(self, 'c', c // divisor)

    @property
    def coefficients(self):
        return (self.a, self.b, self.c)

    def evaluate(self, p):
        """ a*x + b*y - c at p: zero on the line, its sign tells the side. """
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p):
        return self.evaluate(p) == 0

    def parameter(self, p):
        return self.b * p.x - self.a * p.y

    @property
    def direction(self):
        return (self.b, -self.a)

@dataclass(frozen=True)
class LineArrangement:
    lines: tuple

    def __post_init__(self):
        lines = tuple(self.lines)
        if any(line.id is None for line in lines):
            lines = tuple(RationalLine(line.a, line.b, line.c, line.id if line.id is not None else index)
                          for index, line in enumerate(lines, start=1))
        ids = [line.id for line in lines]
        if len(set(ids)) != len(ids):
            raise ValueError('duplicate line ids: %s' % ids)
        object.__setattr__(self, 'lines', lines)

    @property
    def n(self):
        return len(self.lines)

    @property
    def ids(self):
        return tuple(line.id for line in self.lines)

    def replaced(self, *new_lines):
        """ Copy of the arrangement with the lines of the same ids swapped for 'new_lines'. """
        by_id = {line.id: line for line in new_lines}
        return LineArrangement(tuple(by_id.get(line.id, line) for line in self.lines))

    def extended(self, *new_lines):
        return LineArrangement(self.lines + tuple(new_lines))

@dataclass(frozen=True)
class SimplicityReport:
    parallel: tuple = None
    """ First pair of parallel line ids, if any. """

    concurrent: tuple = None
    """ First triple of line ids through one point, if any. """

    point: RationalPoint = None

    @property
    def ok(self):
        return self.parallel is None and self.concurrent is None

    @property
    def message(self):
        if self.parallel:
            return 'lines %s and %s are parallel' % self.parallel
        if self.concurrent:
            return 'lines %s, %s and %s meet at (%s, %s)' % (self.concurrent + (self.point.x, self.point.y))
        return 'simple'

def vertex_label(i, j):
    return (i, j) if i < j else (j, i)

def intersect(l1, l2):
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        raise ParallelLinesError('lines %s and %s are parallel' % (l1.id, l2.id))
    return RationalPoint(Fraction(l1.c * l2.b - l2.c * l1.b, det), Fraction(l1.a * l2.c - l2.a * l1.c, det))

def line_through(p, q, id=None):
    """
    The line through two distinct rational points, with integer coefficients.
    """
    if p == q:
        raise ValueError('a line needs two distinct points')
    a = q.y - p.y
    b = p.x - q.x
    c = a * p.x + b * p.y
    scale = math.lcm(a.denominator, b.denominator, c.denominator)
    return RationalLine(int(a * scale), int(b * scale), int(c * scale), id)

def is_simple(A):
    for l1, l2 in combinations(A.lines, 2):
        if l1.a * l2.b == l2.a * l1.b:
            return SimplicityReport(parallel=(l1.id, l2.id))
    for l1, l2, l3 in combinations(A.lines, 3):
        point = intersect(l1, l2)
        if l3.contains(point):
            return SimplicityReport(concurrent=(l1.id, l2.id, l3.id), point=point)
    return SimplicityReport()

def ensure_simple(A):
    report = is_simple(A)
    if not report.ok:
        raise NonSimpleArrangement(report.message)
    return A

def crossing_points(A):
    """
    Maps every vertex label (i, j) to its exact intersection point.
    """
    return {vertex_label(l1.id, l2.id): intersect(l1, l2) for l1, l2 in combinations(A.lines, 2)}

def crossing_orders(A, points=None):
    """
    For every line id, its crossings sorted along the line's direction.
    """
    if points is None:
        points = crossing_points(A)
    orders = {}
    for line in A.lines:
        vertices = [v for v in points if line.id in v]
        orders[line.id] = tuple(sorted(vertices, key=lambda v: line.parameter(points[v])))
    return orders

def crossing_degrees(A, orders=None):
    """
    Degree of every vertex of the arrangement graph, read off the spans: each of the two lines through a
    vertex contributes one edge if the vertex is an end of its span and two otherwise.
    """
    if orders is None:
        orders = crossing_orders(A)
    degrees = Counter()
    for order in orders.values():
        for index, vertex in enumerate(order):
            degrees[vertex] += 1 if index in (0, len(order) - 1) else 2
    return dict(degrees)

def degree_counts(A):
    return Counter(crossing_degrees(A).values())

def compare_directions(u, v):
    def half(d):
        return 0 if d[1] > 0 or (d[1] == 0 and d[0] > 0) else 1
    if half(u) != half(v):
        return half(u) - half(v)
    cross = u[0] * v[1] - u[1] * v[0]
    return -1 if cross > 0 else (1 if cross < 0 else 0)

def ends_at_infinity(A):
    """
    The 2n ends of the lines in counter-clockwise order, starting from the direction of the positive x axis.
    Each end is (line id, +1) for the end after the line's last crossing and (line id, -1) for the one
    before its first.
    """
    ends = []
    for line in A.lines:
        dx, dy = line.direction
        ends.append(((dx, dy), (line.id, 1)))
        ends.append(((-dx, -dy), (line.id, -1)))
    ends.sort(key=cmp_to_key(lambda u, v: compare_directions(u[0], v[0])))
    return tuple(end for _, end in ends)

def two_vertices(A, degrees=None):
    if degrees is None:
        degrees = crossing_degrees(A)
    return sorted(v for v, degree in degrees.items() if degree == 2)

def star_center(A):
    """
    Centroid of the 2-vertices; the center of the circle for a star construction.
    """
    points = crossing_points(A)
    corners = two_vertices(A)
    if not corners:
        raise ConstructionError('arrangement has no 2-vertices')
    x = sum((points[v].x for v in corners), Fraction(0))
    y = sum((points[v].y for v in corners), Fraction(0))
    return RationalPoint(x / len(corners), y / len(corners))

def _circle_point(t):
    return RationalPoint((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t))

def _matches(counts, expected):
    return all(counts.get(degree, 0) == expected.get(degree, 0) for degree in set(counts) | set(expected))

def star_construction(m):
    """
    Joins each of m points on the unit circle to its two farthest neighbours. Points are rational
    (tan half-angle parametrisation) and only approximately uniform; the arrangement depends on their
    cyclic order alone. Line i + 1 joins points i and i + (m - 1) / 2.
    """
    if m < 3 or m % 2 == 0:
        raise ConstructionError('the star construction needs an odd number of at least 3 lines, got %d' % m)
    half = (m - 1) // 2
    expected = {4: m * (m - 3) // 2, 2: m}
    for attempt in range(get_setting('PSEUDOLINES_CONSTRUCTION_RETRIES')):
        limit = 1000 * 2 ** attempt
        points = [_circle_point(Fraction(math.tan(math.pi * k / m)).limit_denominator(limit)) for k in range(m)]
        lines = [line_through(points[i], points[(i + half) % m], i + 1) for i in range(m)]
        A = LineArrangement(tuple(lines))
        if is_simple(A).ok and _matches(degree_counts(A), expected):
            return A
        logger.debug('star on %d lines not simple with denominators up to %d, refining', m, limit)
    raise ConstructionError('no simple star construction on %d lines found' % m)

def _other_end(order, vertex):
    return order[-1] if order[0] == vertex else order[0]

def _neighbour_on(order, vertex):
    index = order.index(vertex)
    return order[1] if index == 0 else order[-2]

def _expect(A, before, delta):
    expected = Counter(before)
    expected.update(delta)
    return is_simple(A).ok and _matches(degree_counts(A), expected)

def pull_operation(A, x=None):
    """
    Moves the 2-vertex x towards the star's center, just past the first line in the way, by rotating its
    two lines about their other ends. One 2-vertex and one 4-vertex become two 3-vertices.
    The smallest 2-vertex is pulled when x is not given.
    """
    if A.n < 5:
        raise ConstructionError('the pull operation needs a star on at least 5 lines, got %d' % A.n)
    points = crossing_points(A)
    orders = crossing_orders(A, points)
    degrees = crossing_degrees(A, orders)
    if x is None:
        x = two_vertices(A, degrees)[0]
    x = vertex_label(*x)
    if degrees.get(x) != 2:
        raise ConstructionError('%s is not a 2-vertex' % (x,))
    i, j = x
    u = _other_end(orders[i], x)
    v = _other_end(orders[j], x)
    center = star_center(A)
    origin = points[x]
    direction = center - origin
    hits = []
    for line in A.lines:
        if line.id in x:
            continue
        slope = line.a * direction.x + line.b * direction.y
        if slope == 0:
            continue
        s = -line.evaluate(origin) / slope
        if 0 < s <= 1:
            hits.append(s)
    if not hits:
        raise ConstructionError('no line between %s and the center' % (x,))
    hits.sort()
    first = hits[0]
    second = hits[1] if len(hits) > 1 else Fraction(1)
    before = degree_counts(A)
    fraction = Fraction(1, 2)
    for attempt in range(get_setting('PSEUDOLINES_CONSTRUCTION_RETRIES')):
        moved = origin + direction.scaled(first + fraction * (second - first))
        result = A.replaced(line_through(points[u], moved, i), line_through(points[v], moved, j))
        if _expect(result, before, {2: -1, 3: 2, 4: -1}):
            logger.debug('pulled %s past the line at %s (fraction %s)', x, first, fraction)
            return result
        logger.debug('pull of %s failed with fraction %s, halving', x, fraction)
        fraction /= 2
    raise ConstructionError('pull operation on %s did not produce the expected degrees' % (x,))

@dataclass(frozen=True)
class LineOperationSite:
    x: tuple
    """ The 2-vertex the new lines are added near. """

    l1: int
    """ Line whose span is extended past x; every new line meets it outside the old span. """

    l2: int
    v: tuple
    """ Other end of l2's span, a 2-vertex. """

    l3: int
    """ The second line through v; every new line ends on it between v and its neighbour. """

def line_operation_sites(A):
    """
    Candidate (x, l1, l2, v, l3) setups in a fixed order: x runs over the 2-vertices, and for each the
    two choices of l1, keeping those where the other end v of l2 is a 2-vertex too.
    """
    orders = crossing_orders(A)
    degrees = crossing_degrees(A, orders)
    sites = []
    for x in two_vertices(A, degrees):
        for l1, l2 in (x, x[::-1]):
            v = _other_end(orders[l2], x)
            if v != x and degrees[v] == 2:
                l3 = v[0] if v[1] == l2 else v[1]
                sites.append(LineOperationSite(x, l1, l2, v, l3))
    return sites

def _line_operation_at(A, site, k):
    points = crossing_points(A)
    orders = crossing_orders(A, points)
    x, v = points[site.x], points[site.v]
    outward = x - points[_neighbour_on(orders[site.l1], site.x)]
    w = points[_neighbour_on(orders[site.l3], site.v)]
    a, b = x, v
    retries = get_setting('PSEUDOLINES_CONSTRUCTION_RETRIES')
    for step in range(k):
        before = degree_counts(A)
        delta = {3: 2, 4: A.n - 2}
        new_id = max(A.ids) + 1
        fraction = Fraction(1, 2)
        for attempt in range(retries):
            # Both ends move monotonically: away from x along l1 and from v towards w along l3
            next_a = a + outward.scaled(fraction)
            next_b = b + (w - b).scaled(fraction)
            result = A.extended(line_through(next_a, next_b, new_id))
            if _expect(result, before, delta):
                break
            fraction /= 2
        else:
            raise ConstructionError('line operation %d at %s did not produce the expected degrees' % (step + 1, site.x))
        A, a, b = result, next_a, next_b
        logger.debug('line operation %d at %s added line %d', step + 1, site.x, new_id)
    return A

def line_operation(A, x=None, k=1):
    """
    Adds k lines near the 2-vertex x, each crossing every span except the one of l1. The number of
    2-vertices is unchanged and every new line adds two 3-vertices.
    Without x, the first site (see line_operation_sites) on which all k operations succeed is used.
    """
    if k < 1:
        raise ConstructionError('line operation count must be at least 1, got %d' % k)
    sites = line_operation_sites(A)
    if x is not None:
        x = vertex_label(*x)
        if crossing_degrees(A).get(x) != 2:
            raise ConstructionError('%s is not a 2-vertex' % (x,))
        sites = [site for site in sites if site.x == x]
        if not sites:
            raise ConstructionError('the lines through %s do not end in another 2-vertex' % (x,))
    error = None
    for site in sites:
        try:
            return _line_operation_at(A, site, k)
        except ConstructionError as e:
            logger.debug('line operation site %s rejected: %s', site, e)
            error = e
    raise error or ConstructionError('arrangement has no site for a line operation')
