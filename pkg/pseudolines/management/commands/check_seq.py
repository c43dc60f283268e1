from ...exceptions import InvalidSequence
from ...realizer import DegreeSequence, Rejection, check_sequence
from ...serializers import plan_to_dict, rejection_to_dict
from ..base import INPUT_ERROR, REJECTED, ArrangementCommand

class Command (ArrangementCommand):
    help = """Decides whether a degree sequence belongs to a simple arrangement graph, e.g. '4,3,3,2,2,2' or '4^5 2^5'."""

    def add_arguments(self, parser):
        parser.add_argument('sequence', nargs='+', help='Degrees separated by commas or spaces.')

    def handle(self, *args, **options):
        text = ' '.join(options['sequence'])
        try:
            pi = DegreeSequence.parse(text)
        except InvalidSequence as e:
            self.fail({'accepted': False, 'error': str(e), 'position': e.position}, INPUT_ERROR)
        result = check_sequence(pi)
        if isinstance(result, Rejection):
            self.fail(rejection_to_dict(result), REJECTED)
        self.emit(plan_to_dict(result))
