from django.core.management import load_command_class

from . import __version__, conf

import sys

COMMANDS = ('check-seq', 'realize', 'analyze', 'enumerate', 'verify', 'render')

USAGE = """usage: pseudolines <command> [options]

commands:
  check-seq   decide a degree sequence
  realize     build a line arrangement for a degree sequence
  analyze     distances, eccentricities and outer face of a diagram or arrangement
  enumerate   list all wiring diagrams on n wires
  verify      check the structural claims exhaustively
  render      draw a diagram, arrangement or graph

Run 'pseudolines <command> --help' for the options of a command."""

def main(argv=None):
    """
    Entry point of the 'pseudolines' console script. Subcommands are Django management commands of the
    pseudolines app, run without a project.
    """
    argv = list(sys.argv if argv is None else argv)
    if len(argv) < 2 or argv[1] in ('-h', '--help', 'help'):
        print(USAGE)
        return 0 if len(argv) >= 2 else 2
    if argv[1] == '--version':
        print(__version__)
        return 0
    if argv[1] not in COMMANDS:
        print("unknown command '%s'\n\n%s" % (argv[1], USAGE), file=sys.stderr)
        return 2
    conf.configure()
    command = load_command_class('pseudolines', argv[1].replace('-', '_'))
    command.run_from_argv(['pseudolines', argv[1]] + argv[2:])
    return 0

if __name__ == '__main__':
    sys.exit(main())
