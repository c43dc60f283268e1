from django.core.management.base import BaseCommand, CommandError

from ..exceptions import ArrangementError
from ..geometry import ensure_simple
from ..serializers import dumps, load_document
from ..wiring import WiringDiagram, ensure_valid

import logging
import sys

# Exit statuses shared by every subcommand
REJECTED = 1
INPUT_ERROR = 2

VERBOSITY_LEVELS = {0: logging.ERROR, 1: logging.WARNING, 2: logging.INFO, 3: logging.DEBUG}

class ArrangementCommand (BaseCommand):
    """
    Base for the pseudolines subcommands: JSON on stdout, domain errors mapped onto exit statuses.
    """
    requires_system_checks = []

    def execute(self, *args, **options):
        logging.getLogger('pseudolines').setLevel(VERBOSITY_LEVELS.get(options.get('verbosity', 1), logging.DEBUG))
        return super().execute(*args, **options)

    def emit(self, data):
        self.stdout.write(dumps(data))

    def write_output(self, path, text):
        if path in (None, '-'):
            self.stdout.write(text)
            return
        with open(path, 'w') as f:
            f.write(text if text.endswith('\n') else text + '\n')

    def read_document(self, path):
        try:
            if path == '-':
                text = sys.stdin.read()
            else:
                with open(path) as f:
                    text = f.read()
            source = load_document(text)
            if isinstance(source, WiringDiagram):
                return ensure_valid(source)
            return ensure_simple(source)
        except (OSError, ArrangementError) as e:
            self.fail({'error': str(e), 'input': path}, INPUT_ERROR)

    def fail(self, data, returncode):
        """
        Writes the JSON body, then stops with the given exit status.
        """
        self.emit(data)
        raise CommandError(data.get('message') or data.get('error') or 'failed', returncode=returncode)
