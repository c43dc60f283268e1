from pseudolines.exceptions import ConstructionError, NonSimpleArrangement, ParallelLinesError
from pseudolines.geometry import (
    LineArrangement, RationalLine, RationalPoint, crossing_degrees, crossing_orders, degree_counts,
    ends_at_infinity, ensure_simple, intersect, is_simple, line_operation, line_operation_sites,
    line_through, pull_operation, star_center, star_construction, two_vertices,
)

from collections import Counter
from fractions import Fraction
from itertools import combinations
import pytest

def arrangement(*coefficients):
    return LineArrangement(tuple(RationalLine(a, b, c) for a, b, c in coefficients))

def test_normalization():
    line = RationalLine(-2, -4, 6)
    assert line.coefficients == (1, 2, -3)
    assert RationalLine(0, -3, 6).coefficients == (0, 1, -2)
    with pytest.raises(ValueError):
        RationalLine(0, 0, 1)

@pytest.mark.parametrize('l1, l2, point', [
    ((1, 0, 0), (0, 1, 0), (0, 0)),
    ((1, 1, 1), (1, -1, 0), (Fraction(1, 2), Fraction(1, 2))),
    ((2, 3, 7), (1, -1, 1), (2, 1)),
])
def test_intersect(l1, l2, point):
    expected = RationalPoint(*point)
    assert intersect(RationalLine(*l1), RationalLine(*l2)) == expected
    assert intersect(RationalLine(*l2), RationalLine(*l1)) == expected

def test_intersect_parallel():
    with pytest.raises(ParallelLinesError):
        intersect(RationalLine(1, 0, 0, 1), RationalLine(1, 0, 1, 2))

def test_line_through():
    line = line_through(RationalPoint(0, Fraction(1, 3)), RationalPoint(1, 1), 7)
    assert line.id == 7
    assert line.contains(RationalPoint(0, Fraction(1, 3)))
    assert line.contains(RationalPoint(1, 1))
    assert all(isinstance(c, int) for c in line.coefficients)

def test_is_simple():
    assert is_simple(arrangement((1, 0, 0), (0, 1, 0), (1, 1, 1))).ok
    concurrent = is_simple(arrangement((1, 0, 0), (0, 1, 0), (1, 1, 0)))
    assert concurrent.concurrent == (1, 2, 3)
    assert concurrent.point == RationalPoint(0, 0)
    assert is_simple(arrangement((1, 0, 0), (1, 0, 1), (0, 1, 0))).parallel == (1, 2)
    with pytest.raises(NonSimpleArrangement):
        ensure_simple(arrangement((1, 0, 0), (0, 1, 0), (1, 1, 0)))

def test_crossing_orders_follow_direction():
    A = arrangement((0, 1, 0), (1, 0, 0), (1, 1, 1), (1, -1, 2))
    # y = 0 is oriented along (1, 0): crossings sorted by x
    assert crossing_orders(A)[1] == ((1, 2), (1, 3), (1, 4))

def test_ends_at_infinity_alternate():
    A = arrangement((1, 0, 0), (0, 1, 0), (1, 1, 1))
    ends = ends_at_infinity(A)
    assert len(ends) == 6
    for index, (line, sign) in enumerate(ends):
        assert ends[(index + 3) % 6] == (line, -sign)

@pytest.mark.parametrize('m, vertices, counts', [
    (3, 3, {2: 3}),
    (5, 10, {4: 5, 2: 5}),
    (7, 21, {4: 14, 2: 7}),
])
def test_star_construction(m, vertices, counts):
    A = star_construction(m)
    assert A.n == m
    assert is_simple(A).ok
    assert len(crossing_degrees(A)) == vertices
    assert degree_counts(A) == Counter(counts)

@pytest.mark.parametrize('m', [1, 4, 6])
def test_star_construction_needs_odd_size(m):
    with pytest.raises(ConstructionError):
        star_construction(m)

def test_star_center_is_inside(star5):
    center = star_center(star5)
    assert abs(center.x) < Fraction(1, 10) and abs(center.y) < Fraction(1, 10)

@pytest.mark.parametrize('m, counts', [
    (5, {4: 4, 3: 2, 2: 4}),
    (7, {4: 13, 3: 2, 2: 6}),
])
def test_pull_operation(m, counts):
    A = star_construction(m)
    x = two_vertices(A)[0]
    pulled = pull_operation(A, x)
    assert is_simple(pulled).ok
    assert degree_counts(pulled) == Counter(counts)
    assert crossing_degrees(pulled)[x] == 4
    changed = {line.id for line in pulled.lines if line not in A.lines}
    assert changed == set(x)

def test_pull_operation_rejects():
    with pytest.raises(ConstructionError):
        pull_operation(star_construction(3))
    A = star_construction(5)
    four_vertex = next(v for v, d in crossing_degrees(A).items() if d == 4)
    with pytest.raises(ConstructionError):
        pull_operation(A, four_vertex)

def test_line_operation_sites(star5):
    sites = line_operation_sites(star5)
    assert sites
    degrees = crossing_degrees(star5)
    for site in sites:
        assert degrees[site.x] == degrees[site.v] == 2
        assert {site.l1, site.l2} == set(site.x)
        assert {site.l2, site.l3} == set(site.v)

@pytest.mark.parametrize('build, k, counts', [
    (lambda: star_construction(5), 1, {4: 8, 3: 2, 2: 5}),
    (lambda: star_construction(3), 2, {4: 3, 3: 4, 2: 3}),
    (lambda: pull_operation(star_construction(5)), 1, {4: 7, 3: 4, 2: 4}),
])
def test_line_operation(build, k, counts):
    A = build()
    result = line_operation(A, k=k)
    assert result.n == A.n + k
    assert is_simple(result).ok
    assert degree_counts(result) == Counter(counts)
    assert result.lines[:A.n] == A.lines

def test_line_operation_rejects(star5):
    with pytest.raises(ConstructionError):
        line_operation(star5, k=0)
    four_vertex = next(v for v, d in crossing_degrees(star5).items() if d == 4)
    with pytest.raises(ConstructionError):
        line_operation(star5, four_vertex)

def test_every_line_has_all_crossings(star7):
    for line, order in crossing_orders(star7).items():
        assert len(order) == star7.n - 1
        assert all(line in v for v in order)
    assert set(crossing_degrees(star7)) == {tuple(pair) for pair in combinations(range(1, 8), 2)}
