from django.test import override_settings

from pseudolines.exceptions import GraphTooLarge, PathCapExceeded
from pseudolines.graph import build_from_arrangement, build_from_wiring, outer_face_vertices
from pseudolines.metrics import (
    EccentricityReport, Pseudoquadrant, all_distances, all_shortest_paths, central_vertices, check_radius_window,
    common_lines, diametrical_vertices, eccentric_vertices_of, in_closed_quadrant_pair, line_subpath,
    lines_touched, quadrant_of, radius_window, separating_line_count, side_of_line,
)
from pseudolines.wiring import enumerate_all, topological_sweep

from itertools import combinations, product
import logging

import pytest

def test_triangle_distances(triangle_graph):
    report = all_distances(triangle_graph)
    assert all(report.dist[u][v] == 1 for u, v in combinations(triangle_graph.vertices, 2))
    assert report.diameter == report.radius == 1
    assert diametrical_vertices(triangle_graph, report) == set(triangle_graph.vertices)
    u = triangle_graph.vertices[0]
    assert eccentric_vertices_of(triangle_graph, u, report) == set(triangle_graph.vertices) - {u}

def test_four_wire_diameter():
    for d in enumerate_all(4):
        assert all_distances(build_from_wiring(d)).diameter == 2

def test_four_wire_centre(four_graph):
    report = all_distances(four_graph)
    assert report.ecc[(1, 4)] == 2
    assert central_vertices(four_graph, report) == {v for v, e in report.ecc.items() if e == report.radius}
    assert report.radius <= report.diameter <= 2 * report.radius

def test_star_diameter(star5_graph):
    report = all_distances(star5_graph)
    assert report.diameter == 3
    order = star5_graph.line_orders[1]
    u, v = order[0], order[-1]
    assert report.dist[u][v] == 3
    assert separating_line_count(star5_graph, u, v) == 2
    assert diametrical_vertices(star5_graph, report) == outer_face_vertices(star5_graph)

def test_radius_window():
    assert radius_window(3) == (1, 1)
    assert radius_window(5) == (2, 3)
    assert radius_window(7) == (3, 4)
    assert radius_window(9) == (4, 6)

def test_radius_window_is_reported_not_enforced(caplog):
    report = EccentricityReport({}, {}, diameter=3, radius=1, diametrical=frozenset(), central=frozenset())
    with caplog.at_level(logging.WARNING, logger='pseudolines'):
        assert not check_radius_window(report, 5)
    assert 'outside the conjectured window' in caplog.text

def test_sides(triangle_graph):
    for v in triangle_graph.vertices:
        for line in v:
            assert side_of_line(triangle_graph, v, line) == 0

def test_separation_matches_between_representations(star5, star5_graph):
    d, relabel = topological_sweep(star5_graph, 0)
    swept = build_from_wiring(d)

    def mapped(v):
        return tuple(sorted(relabel[line] for line in v))

    for u, v in combinations(star5_graph.vertices, 2):
        assert separating_line_count(star5_graph, u, v) == separating_line_count(swept, mapped(u), mapped(v))

def test_adjacent_vertices(four_graph):
    for u, v in four_graph.edges:
        assert separating_line_count(four_graph, u, v) == 0
        assert all_shortest_paths(four_graph, u, v) == [[u, v]]

def test_colinear_paths_are_unique():
    for d in enumerate_all(4):
        g = build_from_wiring(d)
        for u, v in combinations(g.vertices, 2):
            if common_lines(u, v):
                path = line_subpath(g, u, v)
                assert all_shortest_paths(g, u, v) == [path]
                assert all_distances(g).dist[u][v] == len(path) - 1

def test_paths_touch_k_plus_two_lines(four_graph):
    for u, v in combinations(four_graph.vertices, 2):
        for path in all_shortest_paths(four_graph, u, v):
            assert len(lines_touched(path)) == len(path) + 1

def test_line_subpath(four_graph):
    assert line_subpath(four_graph, (1, 3), (1, 2)) == [(1, 3), (1, 4), (1, 2)]
    with pytest.raises(ValueError):
        line_subpath(four_graph, (1, 2), (3, 4))

def test_shortest_path_limits(four_graph, star7):
    with pytest.raises(ValueError):
        all_shortest_paths(four_graph, (1, 2), (1, 2))
    g = build_from_arrangement(star7)
    with pytest.raises(GraphTooLarge):
        all_shortest_paths(g, g.vertices[0], g.vertices[1])

@override_settings(PSEUDOLINES_PATH_CAP=0)
def test_path_cap(four_graph):
    with pytest.raises(PathCapExceeded):
        all_shortest_paths(four_graph, (1, 2), (1, 4))

def test_quadrant_boundary(four_graph):
    w = (1, 4)
    for target in four_graph.adjacency[w]:
        quadrant = quadrant_of(four_graph, w, target)
        assert quadrant.boundary
        assert quadrant.contains(four_graph, target)

def test_open_quadrants_partition(four_graph):
    w = (1, 4)
    others = [x for x in four_graph.vertices if not set(x) & set(w)]
    assert others
    for x in others:
        owners = [signs for signs in product((-1, 1), repeat=2) if Pseudoquadrant(w, signs).contains(four_graph, x)]
        assert len(owners) == 1

def test_shortest_paths_stay_in_quadrants():
    for d in enumerate_all(4):
        g = build_from_wiring(d)
        for u, v in combinations(g.vertices, 2):
            if common_lines(u, v):
                continue
            for path in all_shortest_paths(g, u, v):
                assert all(in_closed_quadrant_pair(g, u, v, x) for x in path)
