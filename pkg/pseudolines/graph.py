"""
Arrangement graphs: vertices are crossings named by their line pair, edges join crossings that are consecutive
on a line. Both representations (rational line arrangements and wiring diagrams) give an exact straight-line
plane drawing, from which the rotation system, faces, outer face and layers are derived.
"""
from .conf import get_setting
from .exceptions import GraphTooLarge, InvalidEmbedding, TwoSwitchError
from .geometry import RationalPoint, compare_directions, crossing_orders, crossing_points, ends_at_infinity, ensure_simple
from .realizer import DegreeSequence, Rejection, check_sequence
from .wiring import crossings, ensure_valid, states

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, cmp_to_key
import logging

import networkx as nx

logger = logging.getLogger(__name__)

class ArrangementGraph (object):
    """
    The graph of a simple arrangement together with an exact plane drawing.

    line_orders maps each line id to its crossings in order along the line. ends is the counter-clockwise
    cyclic order of the line ends at infinity as (line id, sign): sign +1 is the end after the last crossing
    in line_orders. sides[v][l] is -1, 0 or +1 depending on which side of line l vertex v lies (0 on l).
    """

    def __init__(self, n, line_orders, positions, ends, sides, source):
        self.n = n
        self.line_orders = {line: tuple(order) for line, order in line_orders.items()}
        self.positions = dict(positions)
        self.ends = tuple(ends)
        self.sides = sides
        self.source = source
        adjacency = {v: set() for v in self.positions}
        for order in self.line_orders.values():
            for u, v in zip(order, order[1:]):
                adjacency[u].add(v)
                adjacency[v].add(u)
        self.adjacency = {v: tuple(sorted(neighbours)) for v, neighbours in sorted(adjacency.items())}

    def __repr__(self):
        return '<ArrangementGraph n=%d from %s>' % (self.n, self.source)

    @property
    def lines(self):
        return tuple(sorted(self.line_orders))

    @property
    def vertices(self):
        return tuple(self.adjacency)

    @property
    def edges(self):
        return tuple((u, v) for u in self.adjacency for v in self.adjacency[u] if u < v)

    def degree(self, v):
        return len(self.adjacency[v])

    def degrees(self):
        return {v: len(neighbours) for v, neighbours in self.adjacency.items()}

    @cached_property
    def rotation(self):
        """ Neighbours of every vertex in clockwise order around it. """
        return {v: _clockwise(self.positions, v, neighbours) for v, neighbours in self.adjacency.items()}

    @cached_property
    def embedding(self):
        return _embedding(self.rotation)

    @cached_property
    def face_structure(self):
        return faces(self)

def _clockwise(positions, v, neighbours):
    origin = positions[v]

    def direction(w):
        return (positions[w].x - origin.x, positions[w].y - origin.y)

    ordered = sorted(neighbours, key=cmp_to_key(lambda a, b: compare_directions(direction(a), direction(b))))
    return list(reversed(ordered))

def _embedding(rotation):
    embedding = nx.PlanarEmbedding()
    embedding.set_data(rotation)
    try:
        embedding.check_structure()
    except nx.NetworkXException as e:
        raise InvalidEmbedding(str(e)) from e
    return embedding

def build_from_arrangement(A):
    ensure_simple(A)
    points = crossing_points(A)
    orders = crossing_orders(A, points)
    sides = {}
    for v, point in points.items():
        sides[v] = {}
        for line in A.lines:
            value = line.evaluate(point)
            sides[v][line.id] = (value > 0) - (value < 0)
    return ArrangementGraph(A.n, orders, points, ends_at_infinity(A), sides, 'arrangement')

def build_from_wiring(d):
    """
    The crossing at step t with swap position p is drawn at (t, p + 1/2). Between two consecutive crossings
    a wire stays on one level, so its straight edge stays inside that level's band and the drawing is plane.
    """
    ensure_valid(d)
    orders = {wire: [] for wire in range(1, d.n + 1)}
    positions = {}
    sides = {}
    for crossing, state in zip(crossings(d), list(states(d))[1:]):
        v = crossing.pair
        positions[v] = RationalPoint(crossing.step, Fraction(2 * crossing.position + 1, 2))
        for wire in v:
            orders[wire].append(v)
        sides[v] = {}
        for level, wire in enumerate(state.levels, start=1):
            if wire in v:
                sides[v][wire] = 0
            else:
                sides[v][wire] = 1 if level < crossing.position else -1
    ends = [(wire, 1) for wire in range(d.n, 0, -1)] + [(wire, -1) for wire in range(d.n, 0, -1)]
    return ArrangementGraph(d.n, orders, positions, ends, sides, 'wiring')

def degree_sequence_of(g):
    return DegreeSequence.of(g.degrees().values())

@dataclass(frozen=True)
class FaceStructure:
    faces: tuple
    """ Boundary walks, each a tuple of darts (u, v); the face lies to the right of every dart. """

    outer_face_index: int

    @property
    def outer_face(self):
        return self.faces[self.outer_face_index]

    def vertices_of(self, index):
        return {u for u, _ in self.faces[index]}

def _face_walks(embedding):
    walks = []
    marked = set()
    for v in sorted(embedding.nodes):
        for w in embedding.neighbors_cw_order(v):
            if (v, w) in marked:
                continue
            nodes = embedding.traverse_face(v, w, mark_half_edges=marked)
            walks.append(tuple(zip(nodes, nodes[1:] + nodes[:1])))
    return walks

def _signed_area(positions, nodes):
    total = Fraction(0)
    for u, v in zip(nodes, nodes[1:] + nodes[:1]):
        total += positions[u].x * positions[v].y - positions[v].x * positions[u].y
    return total / 2

def _outer_walk_index(walks, positions):
    if len(walks) == 1:
        return 0
    outer = [index for index, walk in enumerate(walks) if _signed_area(positions, [u for u, _ in walk]) > 0]
    if len(outer) != 1:
        raise InvalidEmbedding('expected exactly one counter-clockwise face walk, found %d' % len(outer))
    return outer[0]

def faces(g):
    """
    Traverses every face of the plane drawing. The outer face is the only walk with positive signed area
    (bounded faces are walked clockwise).
    """
    walks = _face_walks(g.embedding)
    vertex_count, edge_count = len(g.vertices), len(g.edges)
    if vertex_count - edge_count + len(walks) != 2:
        raise InvalidEmbedding('Euler relation fails: V - E + F = %d - %d + %d' % (vertex_count, edge_count, len(walks)))
    return FaceStructure(tuple(walks), _outer_walk_index(walks, g.positions))

def outer_face_vertices(g):
    structure = g.face_structure
    return structure.vertices_of(structure.outer_face_index)

def _point_in_polygon(point, polygon):
    inside = False
    for p, q in zip(polygon, polygon[1:] + polygon[:1]):
        if (p.y > point.y) != (q.y > point.y):
            x = p.x + (point.y - p.y) * (q.x - p.x) / (q.y - p.y)
            if point.x < x:
                inside = not inside
    return inside

def _outer_vertices_of(g, keep):
    """
    Vertices on the outer face of the subgraph induced by 'keep', using the drawing of g. Components lying
    inside a bounded face of another component are not on the outer face.
    """
    if not keep:
        return set()
    subgraph = to_networkx(g).subgraph(keep)
    boundaries = []
    for component in sorted(nx.connected_components(subgraph), key=min):
        rotation = {v: [w for w in g.rotation[v] if w in component] for v in component}
        if len(component) == 1:
            boundaries.append(list(component))
            continue
        walks = _face_walks(_embedding(rotation))
        walk = walks[_outer_walk_index(walks, g.positions)]
        boundaries.append([u for u, _ in walk])
    outer = set()
    for index, boundary in enumerate(boundaries):
        sample = g.positions[boundary[0]]
        enclosed = any(_point_in_polygon(sample, [g.positions[u] for u in other])
                       for other_index, other in enumerate(boundaries)
                       if other_index != index and len(other) > 2)
        if not enclosed:
            outer.update(boundary)
    return outer

def one_layer_vertices(g):
    """
    Outer-face vertices of the graph left after deleting the outer-face vertices and their edges.
    """
    remaining = set(g.vertices) - outer_face_vertices(g)
    return _outer_vertices_of(g, remaining)

def layers(g):
    """
    Peels the drawing: the outer face vertices, then the 1-layer, and so on until no vertex is left.
    """
    result = []
    remaining = set(g.vertices)
    while remaining:
        layer = outer_face_vertices(g) if not result else _outer_vertices_of(g, remaining)
        result.append(layer)
        remaining -= layer
    return result

def to_networkx(g):
    if isinstance(g, nx.Graph):
        return g
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from(g.edges)
    return graph

def is_isomorphic(g1, g2):
    cap = get_setting('PSEUDOLINES_ISOMORPHISM_MAX_VERTICES')
    g1, g2 = to_networkx(g1), to_networkx(g2)
    for graph in (g1, g2):
        if graph.number_of_nodes() > cap:
            raise GraphTooLarge('isomorphism is limited to %d vertices, got %d' % (cap, graph.number_of_nodes()))
    return nx.is_isomorphic(g1, g2)

def two_switch(g, xy, zw):
    """
    Replaces the edges xy and zw by yz and wx. Returns a new abstract graph with the same degree sequence.
    """
    graph = to_networkx(g)
    x, y = xy
    z, w = zw
    if len({x, y, z, w}) != 4:
        raise TwoSwitchError('the four vertices of a 2-switch must be distinct, got %s and %s' % (xy, zw))
    for u, v in (xy, zw):
        if not graph.has_edge(u, v):
            raise TwoSwitchError('%s - %s is not an edge' % (u, v))
    for u, v in ((y, z), (w, x)):
        if graph.has_edge(u, v):
            raise TwoSwitchError('%s - %s is already an edge' % (u, v))
    switched = nx.Graph(graph)
    switched.remove_edges_from([xy, zw])
    switched.add_edges_from([(y, z), (w, x)])
    return switched

def legal_two_switches(g):
    graph = to_networkx(g)
    edges = sorted(tuple(sorted(edge)) for edge in graph.edges)
    for index, (x, y) in enumerate(edges):
        for z, w in edges[index + 1:]:
            for zw in ((z, w), (w, z)):
                a, b = zw
                if len({x, y, a, b}) == 4 and not graph.has_edge(y, a) and not graph.has_edge(b, x):
                    yield (x, y), zw

def find_two_switch_witness(g, references):
    """
    First legal 2-switch on g whose result is isomorphic to none of 'references', as (xy, zw, graph).
    Returns None when every 2-switch stays inside the reference class.
    """
    references = [to_networkx(reference) for reference in references]
    for xy, zw in legal_two_switches(g):
        switched = two_switch(g, xy, zw)
        if not any(is_isomorphic(switched, reference) for reference in references):
            return xy, zw, switched
    return None

def vertex_deletion_rejected(g, v):
    """
    True when the degree sequence of G - v is rejected by check_sequence, so G - v is no arrangement graph.
    """
    degrees = g.degrees()
    for w in g.adjacency[v]:
        degrees[w] -= 1
    del degrees[v]
    return isinstance(check_sequence(DegreeSequence.of(degrees.values())), Rejection)
