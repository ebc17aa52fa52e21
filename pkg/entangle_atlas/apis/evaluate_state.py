import sys

import numpy as np

from ..criteria import entropy_report, evaluate_all
from ..exceptions import AtlasError, ConfigInvalid, InvalidState, NonHermitianInput
from ..linalg import SystemDims, read_state_file
from ..utils.data import is_not_null
from ..utils.file import dump
from .run_survey import ArgumentParser, print_error


REPORT_QS = [1.0, 2.0, float("inf")]


def build_parser():
    parser = ArgumentParser(prog="entangle-atlas evaluate", description="Evaluate every separability criterion on one state")
    parser.add_argument("--state", required=True, help="State file: 'n_a n_b' then lines 'i j re im'")
    parser.add_argument("--n1", type=int, default=None, help="Expected n_a; must match the file header")
    parser.add_argument("--n2", type=int, default=None, help="Expected n_b; must match the file header")
    parser.add_argument("--q", type=float, default=None, help="Extra q for the entropy report; a finite q also adds the q-entropic verdict")
    return parser


def q_key(q):
    return "inf" if np.isinf(q) else f"{q:g}"


def evaluate_state(rho, q=None):
    """Verdict and entropy reports of one state as a JSON-ready dict."""
    q_finite = q if is_not_null(q) and np.isfinite(q) else None
    qs = list(REPORT_QS)
    if is_not_null(q) and q not in qs:
        qs.append(q)
    return dict(
        dims=list(rho.dims.as_tuple()),
        verdict=evaluate_all(rho, q_finite=q_finite).to_dict(),
        entropies={q_key(value): entropy_report(rho, value).to_dict() for value in qs},
    )


def cmd_evaluate(argv=None):
    """``entangle-atlas evaluate``: JSON on stdout; exit 2 on bad flags or a malformed state file."""
    try:
        args = build_parser().parse_args(argv)
        if is_not_null(args.q) and (np.isnan(args.q) or args.q <= 0):
            raise ConfigInvalid(f"q must be positive, got {args.q}")
        dims = None
        if is_not_null(args.n1) or is_not_null(args.n2):
            if args.n1 is None or args.n2 is None:
                raise ConfigInvalid("--n1 and --n2 must be given together")
            dims = SystemDims(args.n1, args.n2)
        rho = read_state_file(args.state, dims=dims)
    except NonHermitianInput as e:
        print_error(f"entangle-atlas evaluate: invalid state (Hermiticity): {e.message}")
        return 2
    except InvalidState as e:
        print_error(f"entangle-atlas evaluate: invalid state: {e.message}")
        return 2
    except AtlasError as e:
        print_error(f"entangle-atlas evaluate: error: {e.message}")
        return 2

    try:
        result = evaluate_state(rho, args.q)
    except AtlasError as e:
        print_error(f"entangle-atlas evaluate: numeric failure: {e.message}")
        return 1
    sys.stdout.write(dump(result, file_format="json", indent=2) + "\n")
    sys.stdout.flush()
    return 0
