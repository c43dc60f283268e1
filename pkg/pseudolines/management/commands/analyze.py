from ...geometry import LineArrangement
from ...graph import build_from_arrangement, build_from_wiring, degree_sequence_of, one_layer_vertices, outer_face_vertices
from ...metrics import all_distances, check_radius_window, diametrical_vertices
from ...render import RenderSpec, render_arrangement_svg, render_graph_dot, render_graph_svg
from ...serializers import dumps, graph_to_dict, report_to_dict, vertex_key
from ..base import ArrangementCommand

class Command (ArrangementCommand):
    help = """Reports degrees, eccentricities, diameter, radius, diametrical and outer-face vertices of a wiring diagram or arrangement file."""

    def add_arguments(self, parser):
        parser.add_argument('input', help="Wiring diagram or arrangement file ('-' for standard input).")
        parser.add_argument('--format', choices=['json', 'graph-json', 'dot', 'svg'], default='json')
        parser.add_argument('--distances', action='store_true', help='Include the all-pairs distance table.')
        parser.add_argument('--mark-outer', action='store_true')
        parser.add_argument('--mark-diametrical', action='store_true')
        parser.add_argument('--out', default=None)

    def handle(self, *args, **options):
        source = self.read_document(options['input'])
        is_arrangement = isinstance(source, LineArrangement)
        g = build_from_arrangement(source) if is_arrangement else build_from_wiring(source)
        if options['format'] == 'graph-json':
            self.write_output(options['out'], dumps(graph_to_dict(g, outer_face_vertices(g))))
            return
        if options['format'] == 'dot':
            self.write_output(options['out'], render_graph_dot(g, mark_outer=True))
            return
        if options['format'] == 'svg':
            spec = RenderSpec('arrangement' if is_arrangement else 'graph', mark_outer=options['mark_outer'],
                              mark_diametrical=options['mark_diametrical'])
            svg = render_arrangement_svg(source, spec, g) if is_arrangement else render_graph_svg(g, spec)
            self.write_output(options['out'], svg)
            return
        report = all_distances(g)
        outer = outer_face_vertices(g)
        diametrical = diametrical_vertices(g, report)
        data = report_to_dict(report, include_distances=options['distances'])
        data.update({
            'source': g.source,
            'n': g.n,
            'degree_sequence': list(degree_sequence_of(g).entries),
            'outer_face': sorted(vertex_key(v) for v in outer),
            'one_layer': sorted(vertex_key(v) for v in one_layer_vertices(g)),
            'outer_face_is_diametrical': diametrical == outer,
            'radius_in_window': check_radius_window(report, g.n),
        })
        if options['out']:
            self.write_output(options['out'], dumps(data))
        else:
            self.emit(data)
