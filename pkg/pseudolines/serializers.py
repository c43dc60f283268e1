"""
JSON documents for diagrams, arrangements, graphs and reports. Output is byte-deterministic: keys are sorted,
rationals are written as 'p/q' strings and line coefficients as decimal strings.
"""
from django.core.serializers.json import DjangoJSONEncoder

from .exceptions import InvalidDocument
from .geometry import LineArrangement, RationalLine
from .wiring import WiringDiagram, parse_text

from fractions import Fraction
import enum
import json
import re

class ArrangementJSONEncoder (DjangoJSONEncoder):

    def default(self, o):
        if isinstance(o, Fraction):
            return '%d/%d' % (o.numerator, o.denominator)
        if isinstance(o, (set, frozenset)):
            return sorted(o)
        if isinstance(o, enum.Enum):
            return o.value
        return super().default(o)

def dumps(data, indent=2):
    return json.dumps(data, cls=ArrangementJSONEncoder, sort_keys=True, indent=indent)

def vertex_key(v):
    return '%d,%d' % tuple(v)

def parse_vertex(text):
    i, j = (int(part) for part in text.split(','))
    return (min(i, j), max(i, j))

def diagram_to_dict(d):
    return {'n': d.n, 'swaps': list(d.swaps)}

def arrangement_to_dict(A):
    return {'lines': [[str(line.a), str(line.b), str(line.c)] for line in A.lines]}

_INTEGER = re.compile(r'^[+-]?\d+$')

def _integer(value):
    """
    JSON integers and decimal integer strings only; floats are refused rather than truncated.
    """
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    if isinstance(value, str) and _INTEGER.match(value.strip()):
        return int(value)
    raise ValueError('expected an integer, got %r' % (value,))

def load_diagram(data):
    try:
        return WiringDiagram(_integer(data['n']), tuple(_integer(p) for p in data['swaps']))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidDocument('not a wiring diagram document: %s' % e) from e

def load_arrangement(data):
    """
    Lines are numbered 1..n in file order.
    """
    try:
        lines = tuple(RationalLine(_integer(a), _integer(b), _integer(c), index)
                      for index, (a, b, c) in enumerate(data['lines'], start=1))
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidDocument('not a line arrangement document: %s' % e) from e
    if len(lines) < 3:
        raise InvalidDocument('an arrangement needs at least 3 lines, got %d' % len(lines))
    return LineArrangement(lines)

def load_document(text):
    """
    Reads a wiring diagram ({"n", "swaps"} or the 'n: s1 s2 ...' text form) or an arrangement ({"lines"}).
    """
    try:
        data = json.loads(text)
    except ValueError:
        return parse_text(text)
    if isinstance(data, dict) and 'lines' in data:
        return load_arrangement(data)
    if isinstance(data, dict) and 'swaps' in data:
        return load_diagram(data)
    raise InvalidDocument('expected a document with "lines" or "swaps"')

def document_to_dict(source):
    if isinstance(source, WiringDiagram):
        return diagram_to_dict(source)
    return arrangement_to_dict(source)

def graph_to_dict(g, outer=None):
    data = {
        'vertices': [vertex_key(v) for v in g.vertices],
        'edges': [[vertex_key(u), vertex_key(v)] for u, v in g.edges],
        'line_orders': {str(line): [vertex_key(v) for v in order] for line, order in g.line_orders.items()},
    }
    if outer is not None:
        data['outer_face'] = sorted(vertex_key(v) for v in outer)
    return data

def plan_to_dict(plan):
    return {
        'accepted': True,
        'n': plan.n,
        'd2': plan.d2,
        'd3': plan.d3,
        'd4': plan.d4,
        'parity_branch': plan.parity_branch,
        'k': plan.k,
        'star_size': plan.star_size,
        'pulls': plan.pulls,
        'sequence': list(plan.sequence.entries),
    }

def rejection_to_dict(rejection):
    return {'accepted': False, 'reason': rejection.code, 'message': rejection.message}

def report_to_dict(report, include_distances=False):
    data = {
        'eccentricities': {vertex_key(v): e for v, e in report.ecc.items()},
        'diameter': report.diameter,
        'radius': report.radius,
        'diametrical': sorted(vertex_key(v) for v in report.diametrical),
        'central': sorted(vertex_key(v) for v in report.central),
    }
    if include_distances:
        data['distances'] = {vertex_key(u): {vertex_key(v): d for v, d in row.items()} for u, row in report.dist.items()}
    return data

def run_to_dict(run):
    return {
        'n_range': list(run.n_range),
        'claims': list(run.claims),
        'instances': {str(n): count for n, count in sorted(run.instance_counts.items())},
        'checks': dict(sorted(run.checks.items())),
        'failures': [
            {'claim': f.claim, 'n': f.n, 'witness': f.witness, 'instance': f.instance}
            for f in run.failures
        ],
        'notes': list(run.notes),
        'passed': run.passed,
    }
