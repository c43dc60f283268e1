"""
Exhaustive verification of the structural results on arrangement graphs.

Every result is a registered Claim with a predicate over one instance (an enumerated wiring diagram or a
constructed line arrangement). A predicate returns None when the claim holds and a witness text otherwise.
"""
from .conf import configure_worker, get_setting, resolved_settings
from .exceptions import EnumerationRangeError, UnknownClaim
from .geometry import star_construction
from .graph import (
    build_from_arrangement, build_from_wiring, degree_sequence_of, find_two_switch_witness as find_switch,
    one_layer_vertices, outer_face_vertices, vertex_deletion_rejected,
)
from .metrics import (
    all_distances, all_shortest_paths, check_radius_window, common_lines, diametrical_vertices,
    eccentric_vertices_of, in_closed_quadrant_pair, line_subpath, lines_touched, separating_line_count,
)
from .realizer import Rejection, accepted_sequences, all_plans, check_sequence, realize
from .serializers import document_to_dict, vertex_key
from .signals import claim_failed, verification_finished
from .wiring import enumerate_all, first_swap_prefixes, restricted_sweep, topological_sweep, validate

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
import logging

logger = logging.getLogger(__name__)

CHEAP, STANDARD, EXPENSIVE = 'cheap', 'standard', 'expensive'

@dataclass(frozen=True)
class Claim:
    id: str
    citation: str
    predicate: object
    cost: str = STANDARD
    """ Expensive claims run up to PSEUDOLINES_EXPENSIVE_CLAIMS_MAX_N lines; past PSEUDOLINES_MAX_ENUMERATION_N
    wires an enumeration only runs the cheap ones. """

    def applies_to(self, n, enumerated=True):
        if self.cost == EXPENSIVE:
            return n <= get_setting('PSEUDOLINES_EXPENSIVE_CLAIMS_MAX_N')
        if self.cost == STANDARD and enumerated:
            return n <= get_setting('PSEUDOLINES_MAX_ENUMERATION_N')
        return True

@dataclass(frozen=True)
class Failure:
    claim: str
    n: int
    witness: str
    instance: dict

@dataclass
class VerificationRun:
    n_range: tuple
    claims: tuple
    instance_counts: dict = field(default_factory=dict)
    checks: Counter = field(default_factory=Counter)
    """ Number of instances each claim was evaluated on. """

    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    """ Informational findings that never fail a run (radius window). """

    @property
    def passed(self):
        return not self.failures

    @property
    def total_instances(self):
        return sum(self.instance_counts.values())

    def merge(self, instances, checks, failures, n):
        self.instance_counts[n] = self.instance_counts.get(n, 0) + instances
        self.checks.update(checks)
        self.failures.extend(failures)

class Instance (object):
    """
    One arrangement under test, with lazily computed graph data shared between claims.
    """

    def __init__(self, source, graph):
        self.source = source
        self.graph = graph
        self.n = graph.n

    @classmethod
    def from_diagram(cls, d):
        return cls(d, build_from_wiring(d))

    @classmethod
    def from_arrangement(cls, A):
        return cls(A, build_from_arrangement(A))

    @cached_property
    def report(self):
        return all_distances(self.graph)

    @cached_property
    def outer(self):
        return outer_face_vertices(self.graph)

    @cached_property
    def sequence(self):
        return degree_sequence_of(self.graph)

    @cached_property
    def shortest_paths(self):
        return {(u, v): all_shortest_paths(self.graph, u, v) for u, v in combinations(self.graph.vertices, 2)}

    def to_dict(self):
        return document_to_dict(self.source)

def _counts_hold(inst):
    s, n = inst.sequence, inst.n
    if s.d2 + s.d3 + s.d4 != n * (n - 1) // 2:
        return 'd2 + d3 + d4 = %d, expected %d' % (s.d2 + s.d3 + s.d4, n * (n - 1) // 2)
    if 2 * s.d2 + s.d3 != 2 * n:
        return '2 d2 + d3 = %d, expected %d' % (2 * s.d2 + s.d3, 2 * n)
    if s.d2 < 3:
        return 'only %d 2-vertices' % s.d2
    if s.d2 == n and n % 2 == 0:
        return 'd2 = n = %d is even' % n

def _sequence_accepted(inst):
    plan = check_sequence(inst.sequence)
    if isinstance(plan, Rejection):
        return '%s rejected: %s' % (inst.sequence, plan.message)
    if plan.n != inst.n:
        return '%s accepted with n = %d instead of %d' % (inst.sequence, plan.n, inst.n)

def _diameter(inst):
    if inst.report.diameter != inst.n - 2:
        return 'diameter %d, expected %d' % (inst.report.diameter, inst.n - 2)

def _outer_is_diametrical(inst):
    diametrical = diametrical_vertices(inst.graph, inst.report)
    if diametrical != inst.outer:
        return 'diametrical %s, outer face %s' % (sorted(map(vertex_key, diametrical)), sorted(map(vertex_key, inst.outer)))

def _colinear_unique_path(inst):
    for (u, v), paths in inst.shortest_paths.items():
        if common_lines(u, v):
            expected = line_subpath(inst.graph, u, v)
            if paths != [expected]:
                return '%d shortest paths between %s and %s, expected only the line sub-path' % (len(paths), u, v)

def _path_lines(inst):
    for (u, v), paths in inst.shortest_paths.items():
        for path in paths:
            k = len(path) - 1
            if len(lines_touched(path)) != k + 2:
                return 'path %s of length %d touches %d lines' % (path, k, len(lines_touched(path)))

def _quadrant(inst):
    for (u, v), paths in inst.shortest_paths.items():
        if common_lines(u, v):
            continue
        for path in paths:
            for x in path:
                if not in_closed_quadrant_pair(inst.graph, u, v, x):
                    return '%s on a shortest %s, %s path is outside the quadrant pair' % (x, u, v)

def _low_degree_eccentric(inst):
    g = inst.graph
    for u in g.vertices:
        if all(g.degree(v) == 4 for v in eccentric_vertices_of(g, u, inst.report)):
            return 'every eccentric vertex of %s has degree 4' % (u,)

def _outer_eccentric(inst):
    for u in inst.graph.vertices:
        if not eccentric_vertices_of(inst.graph, u, inst.report) & inst.outer:
            return 'no eccentric vertex of %s is on the outer face' % (u,)

def _one_layer_eccentricity(inst):
    g = inst.graph
    for u in one_layer_vertices(g):
        if set(g.adjacency[u]) & inst.outer and inst.report.ecc[u] != inst.n - 3:
            return '1-layer vertex %s has eccentricity %d, expected %d' % (u, inst.report.ecc[u], inst.n - 3)

def _restricted_sweep(inst):
    g = inst.graph
    d = restricted_sweep(g)
    if not validate(d).ok:
        return 'restricted sweep %s is invalid' % d
    bottom = [step for step, position in enumerate(d.swaps, start=1) if position == 1]
    if len(bottom) != 1:
        return 'restricted sweep %s has %d swaps at position 1' % (d, len(bottom))
    step = bottom[0]
    if step in (1, len(d.swaps)):
        return 'restricted sweep %s crosses the bottom levels at its first or last step' % d
    swept = build_from_wiring(d)
    vertex = [v for v in swept.vertices if swept.positions[v].x == step][0]
    if swept.degree(vertex) != 2:
        return 'bottom crossing %s of %s has degree %d' % (vertex, d, swept.degree(vertex))

def _vertex_deletion(inst):
    for v in inst.graph.vertices:
        if not vertex_deletion_rejected(inst.graph, v):
            return 'degree sequence of G - %s is accepted' % (v,)

def _cross_representation(inst):
    """
    Sweeping from every unbounded face gives a wiring diagram with the same lines, edges and separations.
    """
    g = inst.graph
    for gap in range(len(g.ends)):
        d, relabel = topological_sweep(g, gap)
        swept = build_from_wiring(d)

        def mapped(v):
            i, j = relabel[v[0]], relabel[v[1]]
            return (min(i, j), max(i, j))

        if {tuple(sorted(mapped(v) for v in e)) for e in g.edges} != set(swept.edges):
            return 'sweep from gap %d (%s) changes the edges' % (gap, d)
        for line in g.lines:
            flips = {g.sides[v][line] * swept.sides[mapped(v)][relabel[line]] for v in g.vertices if line not in v}
            if len(flips) != 1:
                return 'sweep from gap %d (%s) changes the sides of line %s' % (gap, d, line)

def _euler(inst):
    g = inst.graph
    faces = g.face_structure.faces
    if len(g.vertices) - len(g.edges) + len(faces) != 2:
        return 'V - E + F != 2'
    low = {v for v in g.vertices if g.degree(v) < 4}
    if not low <= inst.outer:
        return 'vertices %s of degree < 4 are not on the outer face' % sorted(low - inst.outer)
    for line, order in g.line_orders.items():
        if len(order) != inst.n - 1 or any(v not in g.adjacency[u] for u, v in zip(order, order[1:])):
            return 'crossings of line %s do not form a path' % line

def _metric_axioms(inst):
    r = inst.report
    if not r.radius <= r.diameter <= 2 * r.radius:
        return 'radius %d and diameter %d' % (r.radius, r.diameter)

def _separator_bound(inst):
    g, dist = inst.graph, inst.report.dist
    for u, v in combinations(g.vertices, 2):
        bound = separating_line_count(g, u, v) + (1 if common_lines(u, v) else 2)
        if dist[u][v] < bound:
            return 'd(%s, %s) = %d is below the separator bound %d' % (u, v, dist[u][v], bound)

CLAIMS = [
    Claim('count-identities', 'vertex count identities d2 + d3 + d4 = n(n-1)/2, 2 d2 + d3 = 2n, d2 >= 3, parity', _counts_hold, CHEAP),
    Claim('degree-sequence', 'every arrangement degree sequence is accepted by check_sequence', _sequence_accepted, CHEAP),
    Claim('diameter', 'the diameter of an arrangement graph on n lines is n - 2', _diameter, CHEAP),
    Claim('outer-diametrical', 'a vertex is diametrical iff it lies on the outer face', _outer_is_diametrical),
    Claim('colinear-unique-path', 'vertices on a common line have a unique shortest path, along the line', _colinear_unique_path, EXPENSIVE),
    Claim('path-lines', 'a shortest path of length k has vertices on exactly k + 2 lines', _path_lines, EXPENSIVE),
    Claim('quadrant', 'shortest paths between non co-linear vertices stay in the closed quadrant pair', _quadrant, EXPENSIVE),
    Claim('low-degree-eccentric', 'every vertex has an eccentric vertex of degree at most 3', _low_degree_eccentric),
    Claim('outer-eccentric', 'every vertex has an eccentric vertex on the outer face', _outer_eccentric),
    Claim('one-layer-eccentricity', '1-layer vertices with an outer neighbour have eccentricity n - 3', _one_layer_eccentricity),
    Claim('restricted-sweep', 'a wiring diagram with a single crossing between the bottom two levels exists', _restricted_sweep),
    Claim('vertex-deletion', 'deleting a vertex never leaves an arrangement degree sequence', _vertex_deletion),
    Claim('cross-representation', 'sweeps from every unbounded face preserve edges and separations', _cross_representation),
    Claim('euler', 'faces satisfy Euler, low degree vertices are outer, lines are paths', _euler),
    Claim('metric-axioms', 'radius <= diameter <= 2 radius', _metric_axioms),
    Claim('separator-bound', 'd(u, v) >= separating lines + 1 (co-linear) or + 2', _separator_bound),
]

# Claims about a whole wire count rather than one instance
CENSUS = 'census'
TWO_SWITCH = 'two-switch'
GLOBAL_CLAIMS = {
    CENSUS: 'the degree sequences of all diagrams on n wires are exactly the accepted sequences for n',
    TWO_SWITCH: 'some 2-switch on the n = 4 arrangement graph leaves the class of arrangement graphs',
}

def get_claim(claim_id):
    for claim in CLAIMS:
        if claim.id == claim_id:
            return claim
    raise UnknownClaim('unknown claim %r; known claims: %s' % (claim_id, ', '.join(claim_ids())))

def claim_ids():
    return [claim.id for claim in CLAIMS] + sorted(GLOBAL_CLAIMS)

def _select(claims):
    if claims is None:
        return claim_ids()
    selected = list(claims)
    for claim_id in selected:
        if claim_id not in GLOBAL_CLAIMS:
            get_claim(claim_id)
    return [claim_id for claim_id in claim_ids() if claim_id in selected]

def check_instance(inst, claim_ids, enumerated=True):
    """
    Runs the selected per-instance claims; returns (claims checked, failures).
    """
    checked = []
    failures = []
    for claim in CLAIMS:
        if claim.id not in claim_ids or not claim.applies_to(inst.n, enumerated):
            continue
        checked.append(claim.id)
        witness = claim.predicate(inst)
        if witness is not None:
            failures.append(Failure(claim.id, inst.n, witness, inst.to_dict()))
    return checked, failures

def _verify_partition(n, prefix, claim_ids, allow_large):
    instances = 0
    checks = Counter()
    failures = []
    census = set()
    for d in enumerate_all(n, prefix=prefix, allow_large=allow_large):
        inst = Instance.from_diagram(d)
        checked, found = check_instance(inst, claim_ids)
        instances += 1
        checks.update(checked)
        failures.extend(found)
        census.add(inst.sequence)
    return instances, checks, failures, census

def _announce(run):
    for failure in run.failures:
        claim_failed.send(sender=VerificationRun, claim=failure.claim, n=failure.n, witness=failure.witness, instance=failure.instance)
    verification_finished.send(sender=VerificationRun, run=run)

def verify_all(n_max, claims=None, jobs=1, allow_large=None):
    """
    Checks the selected claims on every wiring diagram with 3..n_max wires. With jobs > 1 the diagrams
    are split by their first swap over a process pool; partial results are merged in prefix order.
    """
    if not 3 <= n_max <= 6:
        raise EnumerationRangeError('verification supports 3 <= n_max <= 6, got %d' % n_max)
    selected = _select(claims)
    run = VerificationRun((3, n_max), tuple(selected))
    for n in range(3, n_max + 1):
        prefixes = first_swap_prefixes(n)
        arguments = [(n, prefix, selected, allow_large) for prefix in prefixes]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs, initializer=configure_worker, initargs=(resolved_settings(),)) as pool:
                results = list(pool.map(_verify_partition, *zip(*arguments)))
        else:
            results = [_verify_partition(*args) for args in arguments]
        census = set()
        for instances, checks, failures, sequences in results:
            run.merge(instances, checks, failures, n)
            census |= sequences
        if CENSUS in selected:
            run.checks[CENSUS] += 1
            expected = accepted_sequences(n)
            if census != expected:
                run.failures.append(Failure(CENSUS, n, 'enumerated %s, accepted %s' % (
                    sorted(map(str, census)), sorted(map(str, expected))), {'n': n}))
        logger.info('verified %d diagrams on %d wires', run.instance_counts[n], n)
    if TWO_SWITCH in selected and n_max >= 4:
        run.checks[TWO_SWITCH] += 1
        if find_two_switch_witness() is None:
            run.failures.append(Failure(TWO_SWITCH, 4, 'every 2-switch gives an arrangement graph', {'n': 4}))
    _announce(run)
    return run

def verify_constructions(n_max=9, claims=None, stars=(5, 7, 9)):
    """
    Realizes every accepted (n, d2) plan up to n_max and the stars on 'stars' lines, and checks the
    selected claims on each. Radii outside the conjectured window are noted, never failed.
    """
    selected = _select(claims)
    run = VerificationRun((3, n_max), tuple(selected))
    instances = []
    for plan in all_plans(n_max):
        A = realize(plan)
        inst = Instance.from_arrangement(A)
        if inst.sequence != plan.sequence:
            run.failures.append(Failure('realization', plan.n, 'realized %s instead of %s' % (inst.sequence, plan.sequence), inst.to_dict()))
        run.checks['realization'] += 1
        instances.append(inst)
    for m in stars:
        if m <= n_max:
            instances.append(Instance.from_arrangement(star_construction(m)))
    for inst in instances:
        checked, failures = check_instance(inst, selected, enumerated=False)
        run.merge(1, checked, failures, inst.n)
    for m in stars:
        if m > n_max:
            continue
        inst = Instance.from_arrangement(star_construction(m))
        if not check_radius_window(inst.report, m):
            run.notes.append('radius %d of the star on %d lines is outside the conjectured window' % (inst.report.radius, m))
        else:
            run.notes.append('radius %d of the star on %d lines is inside the conjectured window' % (inst.report.radius, m))
    _announce(run)
    return run

def degree_sequence_census(n, allow_large=None):
    return {degree_sequence_of(build_from_wiring(d)) for d in enumerate_all(n, allow_large=allow_large)}

def find_two_switch_witness():
    """
    A 2-switch on the graph of the first diagram on 4 wires whose result is isomorphic to no graph of a
    diagram on 4 wires, as a fixture document; None if there is none.
    """
    graphs = [build_from_wiring(d) for d in enumerate_all(4)]
    diagram = next(enumerate_all(4))
    found = find_switch(graphs[0], graphs)
    if found is None:
        return None
    (x, y), (z, w), switched = found
    return {
        'diagram': document_to_dict(diagram),
        'remove': [[vertex_key(x), vertex_key(y)], [vertex_key(z), vertex_key(w)]],
        'add': [[vertex_key(y), vertex_key(z)], [vertex_key(w), vertex_key(x)]],
        'degree_sequence': sorted((d for _, d in switched.degree()), reverse=True),
    }
