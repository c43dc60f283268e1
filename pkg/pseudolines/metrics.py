"""
Hop distances, eccentricities and the shortest path structure of arrangement graphs.
"""
from .conf import get_setting
from .exceptions import GraphTooLarge, PathCapExceeded
from .graph import to_networkx

from dataclasses import dataclass
from itertools import islice
import logging
import math

import networkx as nx

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class EccentricityReport:
    dist: dict
    """ dist[u][v] is the number of edges on a shortest u, v path. """

    ecc: dict
    diameter: int
    radius: int
    diametrical: frozenset
    central: frozenset

@dataclass(frozen=True)
class Pseudoquadrant:
    vertex: tuple
    """ The defining vertex w; its two lines cut the plane into four pseudoquadrants. """

    signs: tuple
    """ Side of each of w's two lines, in the order of w's label. """

    boundary: bool = False
    """ True when the target used to pick the quadrant lies on one of w's lines. """

    def contains(self, g, x):
        """ Closed membership: a vertex on a defining line belongs to the quadrant. """
        for line, sign in zip(self.vertex, self.signs):
            side = g.sides[x][line]
            if side and sign and side != sign:
                return False
        return True

def all_distances(g):
    dist = {u: dict(lengths) for u, lengths in nx.all_pairs_shortest_path_length(to_networkx(g))}
    ecc = {u: max(lengths.values()) for u, lengths in dist.items()}
    diameter = max(ecc.values())
    radius = min(ecc.values())
    return EccentricityReport(
        dist=dist,
        ecc=ecc,
        diameter=diameter,
        radius=radius,
        diametrical=frozenset(u for u, e in ecc.items() if e == diameter),
        central=frozenset(u for u, e in ecc.items() if e == radius),
    )

def eccentric_vertices_of(g, u, report=None):
    report = report or all_distances(g)
    return {v for v, d in report.dist[u].items() if d == report.ecc[u]}

def diametrical_vertices(g, report=None):
    """
    Vertices whose eccentricity is the diameter. Uses distances only, never the drawing.
    """
    return set((report or all_distances(g)).diametrical)

def central_vertices(g, report=None):
    return set((report or all_distances(g)).central)

def radius_window(n):
    """
    Conjectured range of the radius of an arrangement graph on n lines.
    """
    return (math.ceil(n / 2) - 1, 3 * (n - 1) // 4)

def check_radius_window(report, n):
    low, high = radius_window(n)
    if low <= report.radius <= high:
        return True
    logger.warning('radius %d on %d lines is outside the conjectured window [%d, %d]', report.radius, n, low, high)
    return False

def side_of_line(g, v, line):
    return g.sides[v][line]

def separating_line_count(g, u, v):
    return sum(1 for line in g.lines if g.sides[u][line] * g.sides[v][line] == -1)

def common_lines(u, v):
    return set(u) & set(v)

def line_subpath(g, u, v):
    """
    The vertices of a common line of u and v between them, from u to v.
    """
    shared = common_lines(u, v)
    if not shared:
        raise ValueError('%s and %s are not on a common line' % (u, v))
    order = g.line_orders[shared.pop()]
    i, j = order.index(u), order.index(v)
    return list(order[i:j + 1]) if i <= j else list(reversed(order[j:i + 1]))

def lines_touched(path):
    return {line for vertex in path for line in vertex}

def all_shortest_paths(g, u, v):
    if u == v:
        raise ValueError('shortest paths need two distinct vertices')
    max_n = get_setting('PSEUDOLINES_SHORTEST_PATHS_MAX_N')
    if g.n > max_n:
        raise GraphTooLarge('shortest path enumeration is limited to %d lines, got %d' % (max_n, g.n))
    cap = get_setting('PSEUDOLINES_PATH_CAP')
    paths = list(islice(nx.all_shortest_paths(to_networkx(g), u, v), cap + 1))
    if len(paths) > cap:
        raise PathCapExceeded('more than %d shortest paths between %s and %s' % (cap, u, v))
    return sorted(paths)

def quadrant_of(g, w, target):
    signs = tuple(g.sides[target][line] for line in w)
    return Pseudoquadrant(w, signs, boundary=0 in signs)

def in_closed_quadrant_pair(g, u, v, x):
    """
    Whether x lies in the closed intersection of the quadrant of u's lines containing v and
    the quadrant of v's lines containing u.
    """
    return quadrant_of(g, u, v).contains(g, x) and quadrant_of(g, v, u).contains(g, x)
