from ...exceptions import InvalidSequence
from ...geometry import degree_counts
from ...realizer import DegreeSequence, Rejection, check_sequence, realize
from ...render import RenderSpec, render_arrangement_svg
from ...serializers import arrangement_to_dict, dumps, rejection_to_dict
from ..base import INPUT_ERROR, REJECTED, ArrangementCommand

class Command (ArrangementCommand):
    help = """Builds a line arrangement whose graph has the given degree sequence."""

    def add_arguments(self, parser):
        parser.add_argument('sequence', nargs='+')
        parser.add_argument('--out', default=None, help='Arrangement JSON file (default: standard output).')
        parser.add_argument('--svg', default=None, help='Also draw the realization into this SVG file.')
        parser.add_argument('--mark-outer', action='store_true')
        parser.add_argument('--label-lines', action='store_true')

    def handle(self, *args, **options):
        try:
            pi = DegreeSequence.parse(' '.join(options['sequence']))
        except InvalidSequence as e:
            self.fail({'accepted': False, 'error': str(e), 'position': e.position}, INPUT_ERROR)
        plan = check_sequence(pi)
        if isinstance(plan, Rejection):
            self.fail(rejection_to_dict(plan), REJECTED)
        A = realize(plan)
        document = arrangement_to_dict(A)
        if options['out']:
            self.write_output(options['out'], dumps(document))
        if options['svg']:
            spec = RenderSpec('arrangement', mark_outer=options['mark_outer'], label_lines=options['label_lines'])
            self.write_output(options['svg'], render_arrangement_svg(A, spec))
        if options['out']:
            counts = degree_counts(A)
            self.emit({'n': A.n, 'sequence': list(pi.entries), 'out': options['out'], 'svg': options['svg'],
                       'degree_counts': {str(d): c for d, c in sorted(counts.items())}})
        else:
            self.emit(document)
