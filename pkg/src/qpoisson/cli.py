"""``qpoisson {ph,pcoh,hh,hcoh,verify} --matrix FILE``.

Exit status is 0 on success, 1 when a verification check finds a
counterexample and 2 on malformed input.
"""

import argparse
import sys

from .report import InputError, homology_report, load_matrix, verify_report

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2

_HELP = {
    "ph": "Poisson homology HP_*(R, M) with values in the dualising module",
    "pcoh": "Poisson cohomology HP^*(R)",
    "hh": "twisted Hochschild homology HH_*(U, σU) of quantum affine space",
    "hcoh": "Hochschild cohomology HH^*(U, U)",
    "verify": "run the exact identity suite and report pass/fail per check",
}


def build_parser():
    # argparse already exits with status 2 on bad usage
    parser = argparse.ArgumentParser(prog="qpoisson", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in _HELP.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("--matrix", required=True, metavar="PATH",
                       help='JSON file {"n": int, "a": [[int]]} holding a skew integer matrix')
        p.add_argument("--max-degree", type=int, default=5, metavar="N",
                       help="total degree bound of the window (default 5)")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized checks in verify")
        p.add_argument("--representatives", action="store_true",
                       help="include engine representative vectors")
    return parser


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.max_degree < 0:
            raise InputError(f"--max-degree must be non-negative, got {args.max_degree}")
        A = load_matrix(args.matrix)
    except InputError as exc:
        print(f"qpoisson: error: {exc}", file=err)
        return EXIT_INPUT

    if args.command == "verify":
        report = verify_report(A, args.max_degree, args.seed)
    else:
        report = homology_report(args.command, A, args.max_degree, args.representatives)

    out.write(report.to_json() + "\n" if args.format == "json" else report.to_table())
    if not report.passed:
        for c in report.checks:
            if not c["passed"]:
                print(f"qpoisson: check failed: {c['name']}: {c['witness']}", file=err)
        return EXIT_FAILED
    return EXIT_OK


def main():
    sys.exit(run())
