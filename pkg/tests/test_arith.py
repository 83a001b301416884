import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from plcover.arith import (
    continued_fraction,
    convergents,
    dist_to_nearest_int,
    factor_out_p,
    format_fraction,
    padic_abs,
    parse_fraction,
    step_mod,
)

fractions_ = st.builds(Fraction, st.integers(0, 10**30), st.integers(1, 10**30))


@pytest.mark.parametrize("x, expected", [
    (Fraction(1, 2), Fraction(1, 2)),
    (Fraction(10, 7), Fraction(3, 7)),
    (Fraction(7), Fraction(0)),
])
def test_dist_to_nearest_int(x, expected):
    assert dist_to_nearest_int(x) == expected


@given(fractions_)
def test_dist_range_and_symmetry(x):
    d = dist_to_nearest_int(x)
    assert 0 <= d <= Fraction(1, 2)
    assert d == dist_to_nearest_int(1 - (x % 1))
    assert d == min(x - (x // 1), (x // 1) + 1 - x)


@pytest.mark.parametrize("q, p, expected", [(8, 2, Fraction(1, 8)), (12, 2, Fraction(1, 4)), (45, 2, Fraction(1))])
def test_padic_abs(q, p, expected):
    assert padic_abs(q, p) == expected


def test_padic_abs_rejects_zero():
    with pytest.raises(ValueError):
        padic_abs(0, 2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_padic_abs_exhaustive(p):
    for m in range(1, 1001):
        if m % p == 0:
            continue
        for k in range(65):
            assert padic_abs(p**k * m, p) == Fraction(1, p**k)


def test_step_mod_examples():
    assert step_mod(1, 2, 5) == 2
    assert step_mod(4, 2, 5) == 3
    a = 1
    for _ in range(4):
        a = step_mod(a, 2, 5)
    assert a == pow(2, 4, 5) == 1


def test_step_mod_iterates_to_modpow():
    rng = random.Random(1234)
    for _ in range(10_000):
        b = rng.randrange(2, 1001)
        a = rng.randrange(0, b)
        p = rng.choice([2, 3, 5, 7, 11, 13])
        n = rng.randrange(0, 65)
        x = a
        for _ in range(n):
            x = step_mod(x, p, b)
        assert x == pow(p, n, b) * a % b


@pytest.mark.parametrize("x, terms", [
    (Fraction(45, 257), [0, 5, 1, 2, 2, 6]),
    (Fraction(90, 257), [0, 2, 1, 5, 1, 12]),
    (Fraction(1, 2), [0, 2]),
    (Fraction(3), [3]),
])
def test_continued_fraction(x, terms):
    assert continued_fraction(x) == terms


def test_convergents_examples():
    assert list(convergents([0, 2, 1, 5, 1, 12]))[4] == Fraction(7, 20)
    assert Fraction(3, 17) in list(convergents([0, 5, 1, 2, 2, 6]))
    assert list(convergents([0, 2])) == [Fraction(0), Fraction(1, 2)]


def test_convergents_are_lazy():
    def terms():
        yield 0
        yield 2
        raise AssertionError("consumer should have stopped")

    it = convergents(terms())
    assert next(it) == 0 and next(it) == Fraction(1, 2)


def _reduced(bmax):
    for b in range(1, bmax + 1):
        for a in range(0, b + 1):
            if gcd(a, b) == 1:
                yield Fraction(a, b)


def test_cf_roundtrip_exhaustive():
    for x in _reduced(500):
        terms = continued_fraction(x)
        if len(terms) > 1:
            assert terms[-1] >= 2
        assert all(t >= 1 for t in terms[1:])
        assert list(convergents(terms))[-1] == x


def test_best_approximation_exhaustive():
    for x in _reduced(200):
        conv = list(convergents(continued_fraction(x)))
        dens = [c.denominator for c in conv]
        assert all(d1 < d2 for d1, d2 in zip(dens[1:], dens[2:]))
        for k, (ck, cnext) in enumerate(zip(conv, conv[1:])):
            bound = Fraction(1, ck.denominator * cnext.denominator)
            if k + 2 < len(conv):
                assert abs(x - ck) < bound
            else:  # next convergent is x itself
                assert abs(x - ck) == bound


@pytest.mark.parametrize("d, p, expected", [(20, 2, (2, 5)), (5, 2, (0, 5)), (96, 2, (5, 3))])
def test_factor_out_p(d, p, expected):
    assert factor_out_p(d, p) == expected


@given(st.integers(1, 10**40), st.sampled_from([2, 3, 5, 7, 29]))
def test_factor_out_p_property(d, p):
    k, ds = factor_out_p(d, p)
    assert p**k * ds == d and ds % p != 0


def test_fraction_text_form():
    assert parse_fraction("45/257") == Fraction(45, 257)
    assert parse_fraction("2/4") == Fraction(1, 2)
    assert parse_fraction("0") == 0
    assert format_fraction(Fraction(0)) == "0/1"
    with pytest.raises(ValueError):
        parse_fraction("1/0")
    with pytest.raises(ValueError):
        parse_fraction("a/b")
