import sys

from .evaluate_state import cmd_evaluate
from .run_survey import cmd_survey


COMMANDS = dict(survey=cmd_survey, evaluate=cmd_evaluate)
USAGE = "usage: entangle-atlas {survey,evaluate} [options]\n  survey    Monte Carlo survey of the separability criteria\n  evaluate  criteria and entropies of one state file"


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if len(argv) == 0 or argv[0] in ["-h", "--help"]:
        print(USAGE, file=sys.stderr)
        return 0 if len(argv) > 0 else 2
    if argv[0] not in COMMANDS:
        print(f"entangle-atlas: unknown command {argv[0]!r}\n{USAGE}", file=sys.stderr)
        return 2
    try:
        return COMMANDS[argv[0]](argv[1:])
    except SystemExit as e:
        # --help of a sub command
        return e.code if isinstance(e.code, int) else 0
