from ...geometry import LineArrangement
from ...graph import build_from_arrangement, build_from_wiring
from ...render import TARGETS, RenderSpec, render_arrangement_svg, render_graph_dot, render_graph_svg, render_wiring_svg
from ..base import INPUT_ERROR, ArrangementCommand

class Command (ArrangementCommand):
    help = """Draws a wiring diagram, the realization of an arrangement, or its graph as SVG (or the graph as DOT)."""

    def add_arguments(self, parser):
        parser.add_argument('input')
        parser.add_argument('--target', choices=TARGETS, default=None, help='Defaults to the kind of the input file.')
        parser.add_argument('--format', choices=['svg', 'dot'], default='svg')
        parser.add_argument('--size', type=int, default=None)
        parser.add_argument('--label-lines', action='store_true')
        parser.add_argument('--mark-outer', action='store_true')
        parser.add_argument('--mark-diametrical', action='store_true')
        parser.add_argument('--out', default=None)

    def handle(self, *args, **options):
        source = self.read_document(options['input'])
        is_arrangement = isinstance(source, LineArrangement)
        target = options['target'] or ('arrangement' if is_arrangement else 'wiring')
        if options['format'] == 'dot':
            target = 'graph'
        if (target == 'arrangement') != is_arrangement and target != 'graph':
            self.fail({'error': 'cannot draw a %s from this input' % target, 'input': options['input']}, INPUT_ERROR)
        try:
            spec = RenderSpec(target, options['size'], options['label_lines'], options['mark_outer'], options['mark_diametrical'])
        except ValueError as e:
            self.fail({'error': str(e)}, INPUT_ERROR)
        if target == 'wiring':
            output = render_wiring_svg(source, spec)
        else:
            g = build_from_arrangement(source) if is_arrangement else build_from_wiring(source)
            if options['format'] == 'dot':
                output = render_graph_dot(g, mark_outer=options['mark_outer'])
            elif target == 'arrangement':
                output = render_arrangement_svg(source, spec, g)
            else:
                output = render_graph_svg(g, spec)
        self.write_output(options['out'], output)
