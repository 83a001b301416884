"""Best covering interval for a single walk point.

The reference implementation lives here in pure Python.  When the compiled
``plcover._kernel`` extension is importable it handles every step whose
operands fit in its fixed-width arithmetic; anything larger falls back to
:func:`step_py`.  Set ``PLCOVER_PURE=1`` to disable the extension.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Optional, Tuple

from .arith import factor_out_p, is_prime, iter_convergents
from .intervals import CoverInterval, Type1, Type2

__all__ = [
    "SearchConfig",
    "Candidate",
    "StallError",
    "find_type1",
    "find_best_type2",
    "next_interval",
    "step",
    "step_py",
    "type1_hit",
    "BACKEND",
]

DEFAULT_MAX_N = 256

try:
    if os.environ.get("PLCOVER_PURE"):
        raise ImportError("pure Python requested")
    from . import _kernel
except ImportError:
    _kernel = None

BACKEND = "cython" if _kernel is not None else "python"


@dataclass(frozen=True)
class SearchConfig:
    p: int
    E: int
    max_n: int = DEFAULT_MAX_N

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.E < 3:
            raise ValueError(f"E must be >= 3 (epsilon < 1/2), got {self.E}")
        if self.max_n < 1:
            raise ValueError(f"max_n must be >= 1, got {self.max_n}")


class Candidate(NamedTuple):
    interval: CoverInterval
    s: int
    new_point: Fraction


class StallError(RuntimeError):
    """No admissible interval contains the walk point.

    A genuine counterexample at level 1/E would make the walk stall here.
    """

    def __init__(self, point: Fraction, count: Optional[int] = None, segment: Optional[int] = None):
        self.point = point
        self.count = count
        self.segment = segment
        msg = f"stalled at x={point.numerator}/{point.denominator}"
        if count is not None:
            msg += f" after {count} intervals"
        if segment is not None:
            msg += f" in segment {segment}"
        super().__init__(msg)


# Raw step results are plain tuples so the compiled kernel can produce them
# cheaply: (kind, c, d, n, s, left_num, left_den), d = 0 for type-1.
RawStep = Tuple[int, int, int, int, int, int, int]


def type1_hit(a: int, b: int, a_n: int, pn: int) -> Optional[int]:
    """c with c/(pn+1) < a/b <= c/(pn-1), given a_n = pn*a mod b, else None.

    a_n <= a puts a/b at or left of the right endpoint of the interval around
    floor(pn*a/b); b - a_n < a puts it strictly right of the left endpoint of
    the one around the next integer.  b - a_n == a is a left-endpoint hit and
    is rejected, otherwise the walk would not move.
    """
    if a_n <= a:
        return pn * a // b
    if b - a_n < a:
        return pn * a // b + 1
    return None


def _scan_type1(a: int, b: int, p: int, max_n: int):
    a_n, pn = a, 1
    for n in range(1, max_n + 1):
        a_n = a_n * p % b
        pn *= p
        c = type1_hit(a, b, a_n, pn)
        if c is not None:
            return c, n, pn
    return None


def _search_type2(a: int, b: int, p: int, E: int, cap: int):
    best = None
    bound = cap
    n, pn = 0, 1
    while E * pn <= bound:
        num = pn * a
        for c, d in iter_convergents(num, b):
            raw = E * pn * d * d
            if raw > bound:
                break
            # d * |p^n a d - b c| < b / E, kept integral
            if E * d * abs(num * d - b * c) < b:
                k, d_star = factor_out_p(d, p)
                s = raw // p ** k
                key = (s, n + k, d_star)
                if best is None or key < best:
                    best = key + (c,)
                    bound = s
        n += 1
        pn *= p
    return best


def step_py(a: int, b: int, p: int, E: int, max_n: int) -> Optional[RawStep]:
    """One walk step at a/b (0 < a/b <= 1/2); None means stall.

    The returned left endpoint is reduced.
    """
    hit = _scan_type1(a, b, p, max_n)
    cap = hit[2] if hit is not None else p ** max_n
    t2 = _search_type2(a, b, p, E, cap)
    if t2 is not None and (hit is None or t2[0] < hit[2]):
        s, n, d, c = t2
        ln = c * d * E - 1
        g = gcd(ln, s)
        return 2, c, d, n, s, ln // g, s // g
    if hit is not None:
        c, n, pn = hit
        g = gcd(c, pn + 1)
        return 1, c, 0, n, pn, c // g, (pn + 1) // g
    return None


def step(a: int, b: int, cfg: SearchConfig) -> RawStep:
    if _kernel is not None:
        r = _kernel.step(a, b, cfg.p, cfg.E, cfg.max_n)
        if r is not None:
            return r
    r = step_py(a, b, cfg.p, cfg.E, cfg.max_n)
    if r is None:
        raise StallError(Fraction(a, b))
    return r


def raw_to_candidate(r: RawStep) -> Candidate:
    kind, c, d, n, s, ln, ld = r
    iv = Type1(c, n) if kind == 1 else Type2(c, d, n)
    return Candidate(iv, s, Fraction(ln, ld))


def _check_point(x: Fraction) -> None:
    if not 0 < x <= Fraction(1, 2):
        raise ValueError(f"walk point must lie in (0, 1/2], got {x}")


def find_type1(x: Fraction, cfg: SearchConfig) -> Optional[Candidate]:
    """First n <= max_n whose type-1 interval contains x with progress."""
    _check_point(x)
    hit = _scan_type1(x.numerator, x.denominator, cfg.p, cfg.max_n)
    if hit is None:
        return None
    c, n, pn = hit
    return Candidate(Type1(c, n), pn, Fraction(c, pn + 1))


def find_best_type2(x: Fraction, s_cap: int, cfg: SearchConfig) -> Optional[Candidate]:
    """Type-2 interval of minimal size bound (at most ``s_cap``) containing x.

    Only convergents c/d of p^n x need checking: for E > 2, any c/d with
    |p^n x - c/d| < 1/(E d^2) is a convergent (Legendre).
    """
    _check_point(x)
    if s_cap < 1:
        raise ValueError("s_cap must be >= 1")
    t2 = _search_type2(x.numerator, x.denominator, cfg.p, cfg.E, s_cap)
    if t2 is None:
        return None
    s, n, d, c = t2
    return Candidate(Type2(c, d, n), s, Fraction(c * d * cfg.E - 1, s))


def next_interval(x: Fraction, cfg: SearchConfig) -> Candidate:
    """The interval chosen by the greedy walk at x (minimal S, type-1 on ties)."""
    _check_point(x)
    return raw_to_candidate(step(x.numerator, x.denominator, cfg))
