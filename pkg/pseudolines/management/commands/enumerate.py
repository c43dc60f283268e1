from ...exceptions import ArrangementError
from ...serializers import diagram_to_dict, dumps
from ...wiring import count_all, enumerate_all
from ..base import INPUT_ERROR, ArrangementCommand

import os

class Command (ArrangementCommand):
    help = """Lists every simple wiring diagram on n wires, one per line or one JSON file each."""

    def add_arguments(self, parser):
        parser.add_argument('n', type=int)
        parser.add_argument('--out', default=None, help='Directory to write one JSON file per diagram into.')
        parser.add_argument('--prefix', default='', help='Only diagrams starting with these swaps, e.g. "1 2".')
        parser.add_argument('--allow-large', action='store_true', help='Allow n = 6.')

    def handle(self, *args, **options):
        n = options['n']
        prefix = tuple(int(p) for p in options['prefix'].replace(',', ' ').split())
        try:
            diagrams = enumerate_all(n, prefix=prefix, allow_large=options['allow_large'] or None)
            if options['out']:
                os.makedirs(options['out'], exist_ok=True)
                files = []
                for index, d in enumerate(diagrams, start=1):
                    path = os.path.join(options['out'], 'n%d_%06d.json' % (n, index))
                    self.write_output(path, dumps(diagram_to_dict(d)))
                    files.append(path)
                self.emit({'n': n, 'count': len(files), 'expected': count_all(n) if not prefix else None, 'files': files})
            else:
                for d in diagrams:
                    self.stdout.write(str(d))
        except ArrangementError as e:
            self.fail({'error': str(e), 'n': n}, INPUT_ERROR)
