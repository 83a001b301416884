"""Type-1 and type-2 covering intervals.

``Type1(c, n)`` is the interval [c/(p^n+1), c/(p^n-1)]; none of its interior
points in (0, 1/2) is a bottom number for ||.||, since ||p^n x|| < ||x||
there.  ``Type2(c, d, n)`` is [(cdE-1)/(E p^n d^2), (cdE+1)/(E p^n d^2)];
interior points have the witness q = p^n d with q |q|_p ||qx|| < 1/E.

Closed intervals are used when chaining a cover, since rational points
satisfy the target inequality trivially.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Tuple, Union

__all__ = [
    "Type1",
    "Type2",
    "CoverInterval",
    "endpoints",
    "endpoint_pairs",
    "size_bound",
    "contains_with_progress",
    "format_interval",
    "parse_interval",
]


@dataclass(frozen=True, slots=True)
class Type1:
    c: int
    n: int

    def __post_init__(self):
        if self.c < 1 or self.n < 1:
            raise ValueError(f"type-1 interval needs c >= 1 and n >= 1, got {self}")


@dataclass(frozen=True, slots=True)
class Type2:
    c: int
    d: int
    n: int

    def __post_init__(self):
        if self.c < 0 or self.d < 1 or self.n < 0:
            raise ValueError(f"bad type-2 parameters {self}")
        if gcd(self.c, self.d) != 1:
            raise ValueError(f"type-2 needs gcd(c, d) = 1, got {self}")


CoverInterval = Union[Type1, Type2]


def _check_E(E: Optional[int]) -> int:
    if E is None or E < 3:
        raise ValueError(f"type-2 intervals need E >= 3, got {E}")
    return E


def endpoint_pairs(iv: CoverInterval, p: int, E: Optional[int] = None) -> Tuple[int, int, int, int]:
    """Unreduced endpoints as integer pairs (ln, ld, rn, rd), ld, rd > 0."""
    if type(iv) is Type1:
        pn = p ** iv.n
        return iv.c, pn + 1, iv.c, pn - 1
    E = _check_E(E)
    if iv.d % p == 0:
        raise ValueError(f"type-2 interval not normalized: p={p} divides d in {iv}")
    den = E * p ** iv.n * iv.d * iv.d
    mid = iv.c * iv.d * E
    return mid - 1, den, mid + 1, den


def endpoints(iv: CoverInterval, p: int, E: Optional[int] = None) -> Tuple[Fraction, Fraction]:
    ln, ld, rn, rd = endpoint_pairs(iv, p, E)
    return Fraction(ln, ld), Fraction(rn, rd)


def size_bound(iv: CoverInterval, p: int, E: Optional[int] = None) -> int:
    """Integer proxy S for 1/|I|: p^n for type-1, E p^n d^2 for type-2."""
    if type(iv) is Type1:
        return p ** iv.n
    return _check_E(E) * p ** iv.n * iv.d * iv.d


def contains_with_progress(iv: CoverInterval, x: Fraction, p: int, E: Optional[int] = None) -> bool:
    """True iff left < x <= right, by cross-multiplication."""
    ln, ld, rn, rd = endpoint_pairs(iv, p, E)
    a, b = x.numerator, x.denominator
    return ln * b < a * ld and a * rd <= rn * b


def format_interval(iv: CoverInterval) -> str:
    if type(iv) is Type1:
        return f"T1 {iv.c} {iv.n}"
    return f"T2 {iv.c} {iv.d} {iv.n}"


def parse_interval(line: str) -> CoverInterval:
    parts = line.split()
    try:
        if parts and parts[0] == "T1" and len(parts) == 3:
            return Type1(int(parts[1]), int(parts[2]))
        if parts and parts[0] == "T2" and len(parts) == 4:
            return Type2(int(parts[1]), int(parts[2]), int(parts[3]))
    except ValueError as exc:
        raise ValueError(f"bad interval line {line!r}: {exc}") from None
    raise ValueError(f"bad interval line {line!r}")
