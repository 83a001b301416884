"""Brute-force references, deliberately free of the search shortcuts."""
from fractions import Fraction
from math import gcd


def reduced_points(bmax):
    """All reduced a/b with 0 < a/b <= 1/2 and b <= bmax."""
    for b in range(2, bmax + 1):
        for a in range(1, b // 2 + 1):
            if gcd(a, b) == 1:
                yield Fraction(a, b)


def type1_containing(x, p, n):
    """Every c >= 1 with c/(p^n+1) < x <= c/(p^n-1), by direct comparison.

    Such c satisfies x (p^n - 1) <= c < x (p^n + 1), so scanning from
    floor(x (p^n - 1)) to ceil(x (p^n + 1)) misses nothing.
    """
    pn = p**n
    lo = int(x * (pn - 1)) - 1
    hi = int(x * (pn + 1)) + 2
    out = []
    for c in range(max(lo, 1), hi + 1):
        if Fraction(c, pn + 1) < x <= Fraction(c, pn - 1):
            out.append(c)
    return out


def best_type2(x, p, E, cap):
    """Minimal (S, n, d, c) over ALL triples with E p^n d^2 <= cap holding x
    strictly inside, after normalising away factors of p in d.

    The half-width 1/(E p^n d^2) is below 1/(p^n d), so only c within one of
    x p^n d can qualify; the scan window is widened to +-2 regardless.
    """
    best = None
    n = 0
    while E * p**n <= cap:
        pn = p**n
        d = 1
        while E * pn * d * d <= cap:
            centre = x * pn * d
            base = centre.numerator // centre.denominator
            for c in range(max(base - 2, 0), base + 3):
                radius = Fraction(1, E * pn * d * d)
                mid = Fraction(c, pn * d)
                if mid - radius < x < mid + radius:
                    g = gcd(c, d)
                    cc, dd, nn = c // g, d // g, n
                    while dd % p == 0:
                        dd //= p
                        nn += 1
                    key = (E * p**nn * dd * dd, nn, dd, cc)
                    if best is None or key < best:
                        best = key
            d += 1
        n += 1
    return best
