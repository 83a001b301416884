"""Command-line interface.

Exit codes: 0 success, 1 usage or I/O error, 2 stalled walk, 3 certificate
failed verification.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from .arith import format_fraction, is_prime, parse_fraction
from .builder import build_cover_parallel, write_certificate
from .certificate import CheckpointError, FormatError
from .search import BACKEND, DEFAULT_MAX_N, SearchConfig, StallError
from .verifier import oracle_argmin, spot_check, verify_cover

EXIT_OK, EXIT_USAGE, EXIT_STALL, EXIT_INVALID = 0, 1, 2, 3

# E at which a p = 2 build is expected to exceed ten minutes
LONG_RUN_E = 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return parse_fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _prime(text: str) -> int:
    p = int(text)
    if not is_prime(p):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="plcover", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="build a cover certificate")
    b.add_argument("--p", type=_prime, required=True)
    b.add_argument("--E", type=int, required=True, help="epsilon = 1/E, E >= 3")
    b.add_argument("--start", type=_fraction, default=Fraction(1, 2))
    b.add_argument("--target", type=_fraction, default=Fraction(0))
    b.add_argument("--segments", type=int, default=1)
    b.add_argument("--workers", type=int, default=None)
    b.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    b.add_argument("--out", default=None, help="certificate path (default cover_p<p>_E<E>.txt)")
    b.add_argument("--checkpoint", default=None, help="checkpoint path")
    b.add_argument("--checkpoint-every", type=int, default=10_000_000)
    b.add_argument("--checkpoint-seconds", type=float, default=60.0)
    b.add_argument("--resume", action="store_true")
    b.add_argument("--long", action="store_true", help=f"allow E >= {LONG_RUN_E}")
    b.add_argument("--quiet", action="store_true")

    v = sub.add_parser("verify", help="verify a certificate")
    v.add_argument("certificate")
    v.add_argument("--p", type=int, default=None)
    v.add_argument("--E", type=int, default=None)
    v.add_argument("--samples", type=int, default=0, help="spot-check samples per interval")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--quiet", action="store_true")

    o = sub.add_parser("oracle", help="min of q |q|_p ||qx|| over 1 <= q <= Q")
    o.add_argument("--p", type=_prime, required=True)
    o.add_argument("--x", type=_fraction, required=True)
    o.add_argument("--Q", type=int, required=True)
    return parser


def _progress(quiet: bool):
    if quiet:
        return None
    t0 = time.perf_counter()

    def report(ck):
        dt = max(time.perf_counter() - t0, 1e-9)
        print(f"progress segment={ck.segment} point={format_fraction(ck.point)} "
              f"count={ck.count} rate={ck.count / dt:.0f}/s", file=sys.stderr, flush=True)
    return report


def cmd_build(args) -> int:
    if args.E < 3:
        raise UsageError("--E must be >= 3")
    if not (0 <= args.target < args.start <= Fraction(1, 2)):
        raise UsageError("need 0 <= target < start <= 1/2")
    if args.segments < 1:
        raise UsageError("--segments must be >= 1")
    if args.segments > 1 and (args.start != Fraction(1, 2) or args.target != 0):
        raise UsageError("--segments applies to the full range [0, 1/2] only")
    if args.E >= LONG_RUN_E and not args.long:
        raise UsageError(f"E >= {LONG_RUN_E} may run for hours; pass --long to proceed")
    cfg = SearchConfig(args.p, args.E, args.max_n)
    out = args.out or f"cover_p{args.p}_E{args.E}.txt"
    if not args.quiet:
        print(f"building p={args.p} E={args.E} backend={BACKEND} -> {out}", file=sys.stderr)
    try:
        if args.segments == 1:
            cover = write_certificate(
                cfg, out, args.start, args.target,
                checkpoint_path=args.checkpoint, resume=args.resume,
                checkpoint_every=args.checkpoint_every,
                checkpoint_seconds=args.checkpoint_seconds,
                progress=_progress(args.quiet),
            )
        else:
            cover = build_cover_parallel(
                cfg, args.segments, out, workers=args.workers,
                checkpoint_path=args.checkpoint, resume=args.resume,
                checkpoint_every=args.checkpoint_every,
                checkpoint_seconds=args.checkpoint_seconds,
            )
    except StallError as exc:
        print(f"stalled x={format_fraction(exc.point)} count={exc.count} segment={exc.segment}")
        print(f"error: {exc}; possible counterexample neighbourhood", file=sys.stderr)
        return EXIT_STALL
    print(cover.summary())
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_cover(args.certificate, args.p, args.E)
    if args.samples > 0:
        spots = spot_check(args.certificate, args.p, args.E, args.samples, args.seed)
        report.spot_passed, report.spot_failed = spots.spot_passed, spots.spot_failed
        if spots.spot_failed:
            report.valid = False
            report.failures += spots.spot_failed
            report.messages.extend(spots.messages)
    print(report.summary() if args.quiet else report.describe())
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_oracle(args) -> int:
    if args.Q < 1:
        raise UsageError("--Q must be >= 1")
    value, q = oracle_argmin(args.x, args.Q, args.p)
    print(f"{value} at q={q}")
    return EXIT_OK


def main(argv=None) -> int:
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code
    handler = {"build": cmd_build, "verify": cmd_verify, "oracle": cmd_oracle}[args.command]
    try:
        return handler(args)
    except (UsageError, CheckpointError, FormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
