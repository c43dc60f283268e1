"""
SVG and DOT output, rendered through the Django template engine.
"""
from django.template import loader

from .conf import get_setting
from .geometry import crossing_orders, crossing_points
from .graph import build_from_arrangement, outer_face_vertices
from .metrics import all_distances
from .serializers import vertex_key
from .wiring import states

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
import math

TARGETS = ('wiring', 'arrangement', 'graph')

@dataclass(frozen=True)
class RenderSpec:
    target: str = 'graph'
    size: int = None
    """ Canvas width in SVG user units; PSEUDOLINES_SVG_SIZE when not given. """

    label_lines: bool = False
    mark_outer: bool = False
    mark_diametrical: bool = False

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError('render target must be one of %s, got %r' % (', '.join(TARGETS), self.target))
        if self.size is None:
            object.__setattr__(self, 'size', get_setting('PSEUDOLINES_SVG_SIZE'))
        if self.size <= 0:
            raise ValueError('canvas size must be positive, got %r' % self.size)

class Viewport (object):
    """
    Maps exact drawing coordinates onto the canvas: uniform scale, y axis pointing up, a margin of
    PSEUDOLINES_SVG_MARGIN of the width on every side.
    """

    def __init__(self, points, size):
        points = list(points)
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        self.min_x, self.min_y = min(xs), min(ys)
        extent = max(max(xs) - self.min_x, max(ys) - self.min_y) or 1
        self.margin = float(get_setting('PSEUDOLINES_SVG_MARGIN')) * size
        self.scale = (size - 2 * self.margin) / float(extent)
        self.width = size
        self.height = 2 * self.margin + float(max(ys) - self.min_y) * self.scale

    def map(self, x, y):
        return (self.margin + float(x - self.min_x) * self.scale,
                self.height - self.margin - float(y - self.min_y) * self.scale)

def _marker_radius(canvas_points):
    gaps = [math.dist(p, q) for p, q in combinations(canvas_points, 2)]
    smallest = min(gaps) if gaps else 10.0
    return max(1.0, min(4.0, smallest / 3))

def _vertex_marks(g, spec):
    outer = outer_face_vertices(g) if spec.mark_outer else set()
    diametrical = set(all_distances(g).diametrical) if spec.mark_diametrical else set()
    return outer, diametrical

def _vertices_context(g, viewport, spec):
    outer, diametrical = _vertex_marks(g, spec)
    vertices = []
    for v in g.vertices:
        x, y = viewport.map(g.positions[v].x, g.positions[v].y)
        vertices.append({
            'label': vertex_key(v),
            'x': x,
            'y': y,
            'outer': v in outer,
            'diametrical': v in diametrical,
        })
    return vertices

def render_arrangement_svg(A, spec=None, g=None):
    """
    Draws the realization: every line trimmed to its span, with the crossings as markers.
    """
    spec = spec or RenderSpec('arrangement')
    points = crossing_points(A)
    orders = crossing_orders(A, points)
    viewport = Viewport(((p.x, p.y) for p in points.values()), spec.size)
    spans = []
    for line in A.lines:
        first, last = points[orders[line.id][0]], points[orders[line.id][-1]]
        x1, y1 = viewport.map(first.x, first.y)
        x2, y2 = viewport.map(last.x, last.y)
        spans.append({'id': line.id, 'x1': x1, 'y1': y1, 'x2': x2, 'y2': y2})
    if g is None:
        g = build_from_arrangement(A)
    vertices = _vertices_context(g, viewport, spec)
    context = {
        'viewport': viewport,
        'spans': spans,
        'vertices': vertices,
        'radius': _marker_radius([(v['x'], v['y']) for v in vertices]),
        'spec': spec,
    }
    return loader.render_to_string('pseudolines/arrangement.svg', context)

def render_wiring_svg(d, spec=None):
    """
    Wires run on integer levels and cross diagonally; the t-th swap is centred at x = t.
    """
    spec = spec or RenderSpec('wiring')
    length = len(d.swaps)
    viewport = Viewport([(0, 1), (length + 1, d.n)], spec.size)
    paths = {wire: [viewport.map(0, wire)] for wire in range(1, d.n + 1)}
    sequence = list(states(d))
    for step, position in enumerate(d.swaps, start=1):
        before, after = sequence[step - 1], sequence[step]
        for level in (position, position + 1):
            wire = before.levels[level - 1]
            paths[wire].append(viewport.map(step - Fraction(1, 2), level))
            paths[wire].append(viewport.map(step + Fraction(1, 2), after.level_of(wire)))
    wires = []
    for wire, path in paths.items():
        path.append(viewport.map(length + 1, sequence[-1].level_of(wire)))
        start = path[0]
        wires.append({'id': wire, 'points': path, 'label_x': start[0], 'label_y': start[1]})
    context = {
        'viewport': viewport,
        'wires': wires,
        'spec': spec,
    }
    return loader.render_to_string('pseudolines/wiring.svg', context)

def render_graph_svg(g, spec=None):
    spec = spec or RenderSpec('graph')
    viewport = Viewport(((p.x, p.y) for p in g.positions.values()), spec.size)
    vertices = _vertices_context(g, viewport, spec)
    at = {v['label']: v for v in vertices}
    edges = [{'from': at[vertex_key(u)], 'to': at[vertex_key(v)]} for u, v in g.edges]
    context = {
        'viewport': viewport,
        'vertices': vertices,
        'edges': edges,
        'radius': _marker_radius([(v['x'], v['y']) for v in vertices]),
        'spec': spec,
    }
    return loader.render_to_string('pseudolines/graph.svg', context)

def render_graph_dot(g, mark_outer=True):
    outer = outer_face_vertices(g) if mark_outer else set()
    context = {
        'vertices': [{'label': vertex_key(v), 'outer': v in outer, 'degree': g.degree(v)} for v in g.vertices],
        'edges': [(vertex_key(u), vertex_key(v)) for u, v in g.edges],
    }
    return loader.render_to_string('pseudolines/graph.dot', context)
