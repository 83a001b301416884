"""Independent checking of cover certificates.

Nothing here reuses the search code: endpoints are recomputed from their
closed formulas with plain Fractions, and the chain is checked with direct
comparisons.  A certificate passes when its closed intervals form a chain
from ``start`` down to ``target``:

* the first interval reaches ``start``;
* each interval's left endpoint is strictly below the previous one's, and
  its right endpoint reaches the previous left endpoint;
* the last left endpoint is at or below ``target``.

That is exactly the hypothesis under which type-1 and type-2 intervals
certify liminf q |q|_p ||qx|| < 1/E on [target, start].
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, List, Optional, Tuple

from .arith import dist_to_nearest_int, is_prime
from .certificate import FormatError, Header

__all__ = ["VerifyReport", "verify_cover", "spot_check", "oracle_min", "oracle_argmin"]


@dataclass
class VerifyReport:
    valid: bool = True
    intervals_checked: int = 0
    failures: int = 0
    first_failure: Optional[Tuple[int, str]] = None
    spot_passed: int = 0
    spot_failed: int = 0
    header: Optional[Header] = None
    messages: List[str] = field(default_factory=list)

    def fail(self, lineno: int, reason: str) -> None:
        self.valid = False
        self.failures += 1
        if self.first_failure is None:
            self.first_failure = (lineno, reason)
        if len(self.messages) < 20:
            self.messages.append(f"line {lineno}: {reason}")

    def summary(self) -> str:
        return (f"VERIFY ok={'true' if self.valid else 'false'} "
                f"intervals={self.intervals_checked} failures={self.failures}")

    def describe(self) -> str:
        out = []
        if self.header is not None:
            h = self.header
            out.append(f"certificate p={h.p} E={h.E} covering [{h.target}, {h.start}]")
        out.append(f"intervals checked: {self.intervals_checked}")
        if self.spot_passed or self.spot_failed:
            out.append(f"spot checks: {self.spot_passed} passed, {self.spot_failed} failed")
        out.extend(self.messages)
        out.append(self.summary())
        return "\n".join(out)


def _lines(source) -> Iterator[str]:
    if isinstance(source, str):
        with open(source) as fh:
            yield from fh
    else:
        yield from source


def _records(source, report: VerifyReport, p=None, E=None):
    """Yield (lineno, tag, ints) per interval line; track header and END.

    Syntax errors raise FormatError.  Semantic problems (parameter mismatch,
    truncation, wrong END count) are recorded in the report.
    """
    it = iter(_lines(source))
    try:
        first = next(it)
    except StopIteration:
        raise FormatError("empty certificate") from None
    hdr = Header.parse(first)
    report.header = hdr
    if p is not None and hdr.p != p:
        report.fail(1, f"header mismatch: p={hdr.p}, expected {p}")
    if E is not None and hdr.E != E:
        report.fail(1, f"header mismatch: E={hdr.E}, expected {E}")
    if not is_prime(hdr.p):
        report.fail(1, f"header p={hdr.p} is not prime")
    if hdr.E < 3:
        report.fail(1, f"header E={hdr.E} < 3")
    if not (0 <= hdr.target < hdr.start <= Fraction(1, 2)):
        report.fail(1, "header range is not 0 <= target < start <= 1/2")
    ended = False
    count = 0
    lineno = 1
    for lineno, line in enumerate(it, start=2):
        parts = line.split()
        if not parts:
            raise FormatError(f"line {lineno}: empty line")
        if ended:
            raise FormatError(f"line {lineno}: content after END")
        if parts[0] == "END":
            if len(parts) != 2 or not parts[1].startswith("count="):
                raise FormatError(f"line {lineno}: bad END line")
            try:
                declared = int(parts[1][6:])
            except ValueError:
                raise FormatError(f"line {lineno}: bad END count") from None
            if declared != count:
                report.fail(lineno, f"END declares {declared} intervals, found {count}")
            ended = True
            continue
        want = {"T1": 2, "T2": 3}.get(parts[0])
        if want is None or len(parts) != want + 1:
            raise FormatError(f"line {lineno}: malformed interval {line.strip()!r}")
        try:
            nums = tuple(int(t) for t in parts[1:])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer field in {line.strip()!r}") from None
        count += 1
        yield lineno, parts[0], nums
    if not ended:
        report.fail(lineno + 1, "truncated certificate: missing END line")


def _closed(tag: str, nums: Tuple[int, ...], p: int, E: int) -> Tuple[Fraction, Fraction]:
    if tag == "T1":
        c, n = nums
        return Fraction(c, p ** n + 1), Fraction(c, p ** n - 1)
    c, d, n = nums
    center = Fraction(c, p ** n * d)
    radius = Fraction(1, E * p ** n * d * d)
    return center - radius, center + radius


def _param_error(tag: str, nums: Tuple[int, ...], p: int) -> Optional[str]:
    if tag == "T1":
        c, n = nums
        if c < 1 or n < 1:
            return f"type-1 parameters need c >= 1, n >= 1: {nums}"
        return None
    c, d, n = nums
    if c < 0 or d < 1 or n < 0:
        return f"type-2 parameters out of range: {nums}"
    if d % p == 0:
        return f"type-2 d={d} divisible by p={p}"
    if gcd(c, d) != 1:
        return f"type-2 gcd(c, d) != 1: {nums}"
    return None


def verify_cover(source, p: Optional[int] = None, E: Optional[int] = None) -> VerifyReport:
    """Single streaming pass over a certificate (path or iterable of lines).

    Raises :class:`FormatError` for syntactically malformed input; every
    other problem is recorded in the returned report.
    """
    report = VerifyReport()
    prev_left = None
    for lineno, tag, nums in _records(source, report, p, E):
        hdr = report.header
        report.intervals_checked += 1
        err = _param_error(tag, nums, hdr.p)
        if err:
            report.fail(lineno, err)
            continue
        left, right = _closed(tag, nums, hdr.p, hdr.E)
        if prev_left is None:
            if right < hdr.start:
                report.fail(lineno, f"first interval ends at {right}, below start {hdr.start}")
        else:
            if right < prev_left:
                report.fail(lineno, f"chain break: gap between {right} and {prev_left}")
            if not left < prev_left:
                report.fail(lineno, f"no progress: left endpoint {left} not below {prev_left}")
        prev_left = left
    if report.header is not None and prev_left is None:
        report.fail(2, "certificate has no intervals")
    elif prev_left is not None and prev_left > report.header.target:
        report.fail(report.intervals_checked + 1,
                    f"cover stops at {prev_left}, above target {report.header.target}")
    return report


def _interior_samples(lo: Fraction, hi: Fraction, m: int, rng: random.Random) -> List[Fraction]:
    # dyadic subdivision: lo + (hi - lo) * t / 2^16 with 0 < t < 2^16
    width = hi - lo
    return [lo + width * Fraction(rng.randrange(1, 1 << 16), 1 << 16) for _ in range(m)]


def spot_check(source, p: Optional[int] = None, E: Optional[int] = None,
               samples_per_interval: int = 3, seed: int = 0) -> VerifyReport:
    """Check the defining inequality of each interval at seeded interior points.

    Type-1: ||p^n x|| < ||x|| for x in the interior intersected with (0, 1/2).
    Type-2: d ||p^n d x|| < 1/E, i.e. the witness q = p^n d works.
    """
    if samples_per_interval < 1:
        raise ValueError("samples_per_interval must be >= 1")
    report = VerifyReport()
    half = Fraction(1, 2)
    for idx, (lineno, tag, nums) in enumerate(_records(source, report, p, E)):
        hdr = report.header
        report.intervals_checked += 1
        if _param_error(tag, nums, hdr.p):
            report.fail(lineno, f"cannot sample invalid interval {tag} {nums}")
            continue
        lo, hi = _closed(tag, nums, hdr.p, hdr.E)
        if tag == "T1":
            lo, hi = max(lo, Fraction(0)), min(hi, half)
            if lo >= hi:
                report.fail(lineno, f"type-1 interval {nums} misses (0, 1/2)")
                continue
        rng = random.Random(f"{seed}:{idx}")
        for x in _interior_samples(lo, hi, samples_per_interval, rng):
            if tag == "T1":
                c, n = nums
                ok = dist_to_nearest_int(hdr.p ** n * x) < dist_to_nearest_int(x)
            else:
                c, d, n = nums
                ok = d * dist_to_nearest_int(hdr.p ** n * d * x) * hdr.E < 1
            if ok:
                report.spot_passed += 1
            else:
                report.spot_failed += 1
                report.fail(lineno, f"{tag} {nums} fails at x={x}")
    return report


def oracle_argmin(x: Fraction, Q: int, p: int) -> Tuple[Fraction, int]:
    """min over 1 <= q <= Q of q |q|_p ||q x||, with the smallest minimizing q."""
    if Q < 1:
        raise ValueError("Q must be >= 1")
    a, b = x.numerator % x.denominator, x.denominator
    best_num, best_q = None, 0
    for q in range(1, Q + 1):
        m = q
        while m % p == 0:
            m //= p
        r = q * a % b
        val = m * min(r, b - r)  # over the common denominator b
        if best_num is None or val < best_num:
            best_num, best_q = val, q
            if val == 0:
                break
    return Fraction(best_num, b), best_q


def oracle_min(x: Fraction, Q: int, p: int) -> Fraction:
    return oracle_argmin(x, Q, p)[0]
