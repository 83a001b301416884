"""Exact integer and rational primitives.

Rationals are :class:`fractions.Fraction` throughout; everything here is a
pure function on immutable values.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterator, List, Tuple

__all__ = [
    "parse_fraction",
    "format_fraction",
    "dist_to_nearest_int",
    "padic_valuation",
    "padic_abs",
    "step_mod",
    "continued_fraction",
    "convergents",
    "factor_out_p",
    "is_prime",
]


def parse_fraction(text: str) -> Fraction:
    """Parse ``"num/den"`` (or a bare integer) into a reduced Fraction."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a fraction: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(n, d)


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def dist_to_nearest_int(x: Fraction) -> Fraction:
    """||x||, the distance from x to the nearest integer."""
    r = x.numerator % x.denominator
    return Fraction(min(r, x.denominator - r), x.denominator)


def padic_valuation(q: int, p: int) -> int:
    if q == 0:
        raise ValueError("valuation of 0 is infinite")
    q = abs(q)
    v = 0
    while q % p == 0:
        q //= p
        v += 1
    return v


def padic_abs(q: int, p: int) -> Fraction:
    """|q|_p = p**-v where p**v exactly divides q."""
    if q == 0:
        raise ValueError("padic_abs(0) is rejected")
    return Fraction(1, p ** padic_valuation(q, p))


def step_mod(a_n: int, p: int, b: int) -> int:
    return a_n * p % b


def continued_fraction(x: Fraction) -> List[int]:
    """Canonical expansion [a0; a1, ...] of a non-negative rational.

    The Euclidean algorithm already yields a final quotient >= 2 whenever
    there is more than one term.
    """
    if x < 0:
        raise ValueError("continued_fraction expects x >= 0")
    num, den = x.numerator, x.denominator
    terms = []
    while den:
        q, r = divmod(num, den)
        terms.append(q)
        num, den = den, r
    return terms


def convergents(terms: List[int]) -> Iterator[Fraction]:
    """Lazily yield the convergents of ``[a0; a1, ...]``."""
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    for a in terms:
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        yield Fraction(h1, k1)


def iter_convergents(num: int, den: int) -> Iterator[Tuple[int, int]]:
    """Convergents (c, d) of num/den straight from the Euclidean algorithm.

    Integer-pair variant of ``convergents(continued_fraction(...))`` used on
    the hot path: no Fraction objects and no list of partial quotients.
    """
    h0, h1 = 0, 1
    k0, k1 = 1, 0
    while den:
        q, r = divmod(num, den)
        h0, h1 = h1, q * h1 + h0
        k0, k1 = k1, q * k1 + k0
        yield h1, k1
        num, den = den, r


def factor_out_p(d: int, p: int) -> Tuple[int, int]:
    """Split d = p**k * d_star with p not dividing d_star; returns (k, d_star)."""
    if d < 1:
        raise ValueError("factor_out_p expects d >= 1")
    k = 0
    while d % p == 0:
        d //= p
        k += 1
    return k, d


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True
