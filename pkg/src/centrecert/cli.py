"""Command line entry point: ``centrecert verify`` and ``centrecert show``.

Exit status: 0 all checks pass, 1 some check failed, 2 invalid configuration.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .verifier import GROUPS, SHOW_EXPRS, ConfigError, SuiteConfig, run_suite, show


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="centrecert")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the certificate suite")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--l", type=int, required=True)
    v.add_argument("--p", type=int, default=None)
    v.add_argument("--checks", default="all",
                   help=f"comma-separated subset of {','.join(GROUPS)},all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", default=None, help="report path (default: stdout)")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--n-max", type=int, default=None,
                   help="raise the dimension limits for every check group")
    v.add_argument("--timings", action="store_true", help="print per-check wall times to stderr")

    s = sub.add_parser("show", help="print a polynomial and its leading term")
    s.add_argument("--expr", required=True, choices=SHOW_EXPRS)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--l", type=int, default=None)
    s.add_argument("--k", type=int, default=None)
    return p


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = _parser().parse_args(argv)
    if args.command == "show":
        try:
            print(show(args.expr, args.n, args.l, args.k))
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        return 0

    limits = {}
    if args.n_max is not None:
        limits = {"n_max_numeric": args.n_max, "n_max_symbolic": args.n_max}
    config = SuiteConfig(
        n=args.n, l=args.l, p=args.p,
        checks=tuple(c.strip() for c in args.checks.split(",") if c.strip()),
        seed=args.seed, output_path=args.out, workers=args.workers, **limits)
    try:
        report = run_suite(config)
    except ConfigError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return 2
    text = report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.timings:
        print(report.timings(), file=sys.stderr)
    if not report.passed:
        for r in report.failed:
            print(f"FAIL {r.check_id}: {r.message}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
