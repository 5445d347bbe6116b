from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from atkinlike.errors import InvalidParams, QDBreakdown, SingularHankel
from atkinlike.extremal import normalizing_factor
from atkinlike.rogers import (
    CFCoeffs,
    addition_formula_check,
    alpha_closed,
    atkin_cf,
    beta_closed,
    cf_check,
    cosine_toy,
    e_closed,
    jfraction_from_moments,
    moment_series,
    phi_hypergeometric,
    phi_series,
    sfraction_from_series,
)
from atkinlike.series import Poly, QSeries

F = Fraction
X = Poly.X()


def test_first_e_values():
    cf = atkin_cf(3)
    assert list(cf.e[:4]) == [720, 546, 374, 475]
    assert [e_closed(n) for n in range(1, 5)] == [720, 546, 374, 475]


def test_alpha_beta_values():
    cf = atkin_cf(4)
    assert cf.alpha[0] == 720 and cf.alpha[1] == 920
    assert cf.beta[0] == 393120
    assert [alpha_closed(n) for n in range(1, 5)] == list(cf.alpha)
    assert [beta_closed(n) for n in range(1, 5)] == list(cf.beta)


def test_normalizing_products():
    cf = atkin_cf(5)
    assert list(cf.A[:5]) == [normalizing_factor(r, 2) for r in range(5)]


def test_cf_report():
    rep = cf_check(6)
    assert rep.passed, rep.failures()


def test_consistency_detects_mismatch():
    cf = atkin_cf(3)
    bad = CFCoeffs(cf.e, (cf.alpha[0] + 1,) + cf.alpha[1:], cf.beta, cf.A)
    assert cf.consistent() and not bad.consistent()


@pytest.mark.parametrize("r", range(5))
def test_phi_routes(r):
    s = phi_series(r, 12)
    assert s.agrees_with(phi_hypergeometric(r, 12))


def test_phi_zero_is_moment_series():
    assert phi_series(0, 8).agrees_with(moment_series(8))


def test_phi_negative_index():
    with pytest.raises(InvalidParams):
        phi_series(-1, 4)


def test_cosine_toy():
    rep = cosine_toy(8)
    assert rep.passed, rep.failures()


def test_addition_formula():
    rep = addition_formula_check(5)
    assert rep.passed, rep.failures()


def test_jfraction_errors():
    with pytest.raises(InvalidParams):
        jfraction_from_moments([1, 2, 3], 2)
    with pytest.raises(SingularHankel):
        jfraction_from_moments([1, 1, 1, 1, 1], 2)
    alpha, beta = jfraction_from_moments([1, 1, 1, 1, 1], 2, allow_terminate=True)
    assert alpha == [1, 0] and beta == [0, 0]


def test_qd_breakdown():
    with pytest.raises(QDBreakdown):
        sfraction_from_series(QSeries([0, 1, 2], 0, 3, "x"), 2)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(1, 30), min_size=3, max_size=5, unique=True),
    st.lists(st.integers(1, 9), min_size=5, max_size=5),
)
def test_qd_and_stieltjes_agree_on_discrete_measures(points, weights):
    # moments of a positive measure on k positive points give a Stieltjes sequence
    k = len(points)
    depth = k - 1
    ms = [sum(F(w) * x**n for x, w in zip(points, weights)) for n in range(2 * depth + 2)]
    alpha, beta = jfraction_from_moments(ms, depth)
    assume(all(b > 0 for b in beta))
    e = sfraction_from_series(QSeries(ms, 0, len(ms), "x"), 2 * depth)
    assert all(x > 0 for x in e)
    assert CFCoeffs(tuple(e), tuple(alpha), tuple(beta), ()).consistent()

    # the three-term polynomials are orthogonal for the same moments
    def L(P):
        return sum((c * ms[i] for i, c in enumerate(P.coeffs)), F(0))

    prev, cur = Poly(), Poly([1])
    polys = [cur]
    for n in range(depth):
        nxt = (X - alpha[n]) * cur - (prev * beta[n - 1] if n else Poly())
        prev, cur = cur, nxt
        polys.append(cur)
    for i in range(len(polys)):
        for j in range(i):
            assert L(polys[i] * polys[j]) == 0
