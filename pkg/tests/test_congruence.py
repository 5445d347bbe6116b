from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from atkinlike.congruence import (
    FpPoly,
    congruence_sweep,
    is_prime,
    prime_split,
    reduce_poly_mod_p,
    supersingular_j,
    supersingular_poly,
    thm24_check,
)
from atkinlike.errors import CompositeModulus, InvalidParams, NotPIntegral
from atkinlike.series import Poly

X = Poly.X()


def hasse_coeff(a, b, p):
    """x^(p-1) coefficient of (x^3 + a x + b)^((p-1)/2) over F_p, by plain expansion."""
    poly = [1]
    for _ in range((p - 1) // 2):
        nxt = [0] * (len(poly) + 3)
        for i, c in enumerate(poly):
            nxt[i] = (nxt[i] + c * b) % p
            nxt[i + 1] = (nxt[i + 1] + c * a) % p
            nxt[i + 3] = (nxt[i + 3] + c) % p
        poly = nxt
    return poly[p - 1] if p - 1 < len(poly) else 0


def fp_supersingular(p):
    out = []
    for j in range(p):
        if j == 0:
            a, b = 0, 1
        elif j == 1728 % p:
            a, b = 1, 0
        else:
            k = j * (1728 - j)
            a, b = 3 * k % p, 2 * k * (1728 - j) % p
        if hasse_coeff(a, b, p) == 0:
            out.append(j)
    return out


def test_small_primes():
    assert supersingular_poly(5) == FpPoly([0, 1], 5)
    assert supersingular_poly(7) == FpPoly([1, 1], 7)
    assert supersingular_poly(11) == FpPoly([0, 10, 1], 11)
    assert supersingular_poly(13) == FpPoly([8, 1], 13)
    assert supersingular_poly(17) == FpPoly([0, 9, 1], 17)


def test_degree_matches_split():
    for p in (5, 7, 11, 13, 37, 61, 97):
        m, d, e = prime_split(p)
        assert p - 1 == 12 * m + 4 * d + 6 * e
        assert supersingular_poly(p).degree == m + d + e


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43])
def test_oracle_agrees_with_plain_hasse_on_fp(p):
    in_fp = sorted(x for x, y in supersingular_j(p) if y == 0)
    assert in_fp == fp_supersingular(p)


def test_p37_has_conjugate_pair():
    pairs = supersingular_j(37)
    assert len(pairs) == 3
    assert sum(1 for _, y in pairs if y) == 2


def test_reduction():
    assert reduce_poly_mod_p(X**2 - 1640 * X + 269280, 7).coeffs == (269280 % 7, -1640 % 7, 1)
    assert reduce_poly_mod_p(Poly([Fraction(1, 3), 1]), 5).coeffs == (2, 1)
    with pytest.raises(NotPIntegral):
        reduce_poly_mod_p(Poly([Fraction(1, 5), 1]), 5)


def test_four_classes_one_prime():
    rep = thm24_check(13)
    assert rep.passed and len(rep) == 6


def test_sweep_to_97():
    rep = congruence_sweep(97)
    assert rep.passed, rep.failures()
    assert len(rep) == 23 * 6


def test_errors():
    with pytest.raises(CompositeModulus):
        thm24_check(15)
    with pytest.raises(InvalidParams):
        thm24_check(3)


@given(st.integers(-50, 200))
def test_is_prime_matches_trial_division(n):
    assert is_prime(n) == (n > 1 and all(n % d for d in range(2, n)))
