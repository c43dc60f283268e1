from ...exceptions import ArrangementError
from ...oracle import claim_ids, verify_all, verify_constructions
from ...serializers import run_to_dict
from ...signals import claim_failed
from ..base import INPUT_ERROR, REJECTED, ArrangementCommand

import logging

logger = logging.getLogger(__name__)

def log_failure(sender, claim, n, witness, instance, **kwargs):
    logger.warning('claim %s fails on n = %d: %s (%s)', claim, n, witness, instance)

class Command (ArrangementCommand):
    help = """Checks the structural claims on every wiring diagram up to --n-max wires (and optionally on constructed arrangements)."""

    def add_arguments(self, parser):
        parser.add_argument('n_max', nargs='?', type=int, default=None)
        parser.add_argument('--n-max', dest='n_max_option', type=int, default=None)
        parser.add_argument('--claims', '--claim', default=None, help='Comma separated claim ids (default: all). One of: %s' % ', '.join(claim_ids()))
        parser.add_argument('--jobs', type=int, default=1)
        parser.add_argument('--allow-large', action='store_true', help='Allow n_max = 6.')
        parser.add_argument('--constructions', type=int, default=None, metavar='N_MAX',
                            help='Also realize every accepted plan with up to N_MAX lines and check it.')

    def handle(self, *args, **options):
        n_max = options['n_max_option'] or options['n_max'] or 5
        claims = [c.strip() for c in options['claims'].split(',') if c.strip()] if options['claims'] else None
        claim_failed.connect(log_failure, dispatch_uid='pseudolines-verify-log')
        try:
            run = verify_all(n_max, claims, jobs=options['jobs'], allow_large=options['allow_large'] or None)
            data = run_to_dict(run)
            passed = run.passed
            if options['constructions']:
                constructed = verify_constructions(options['constructions'], claims)
                data['constructions'] = run_to_dict(constructed)
                passed = passed and constructed.passed
        except ArrangementError as e:
            self.fail({'error': str(e)}, INPUT_ERROR)
        finally:
            claim_failed.disconnect(dispatch_uid='pseudolines-verify-log')
        if not passed:
            data['message'] = 'verification failed'
            self.fail(data, REJECTED)
        self.emit(data)
