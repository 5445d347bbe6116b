from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atkinlike.errors import InsufficientPrecision, InvalidWeight, NotPolynomialInJ
from atkinlike.faber import faber_poly
from atkinlike.modforms import (
    E2,
    E4,
    E6,
    d_operator,
    delta,
    delta_and_j,
    delta_product,
    eisenstein,
    hecke_composition_check,
    hecke_weight_k,
    integrality_check,
    j_invariant,
    leibniz_check,
    leibniz_holds,
    poly_in_j,
    ramanujan_check,
    recognize_poly_in_j,
    serre_derivative,
    sigma,
)
from atkinlike.series import Poly, QSeries

F = Fraction
X = Poly.X()


def test_eisenstein_examples():
    assert eisenstein(2, 3).series == QSeries([1, -24, -72], 0, 3)
    assert eisenstein(4, 2).series == QSeries([1, 240], 0, 2)
    assert eisenstein(6, 2).series == QSeries([1, -504], 0, 2)
    assert eisenstein(2, 3).depth == 1 and eisenstein(4, 3).depth == 0


def test_eisenstein_rejects_bad_input():
    with pytest.raises(InvalidWeight):
        eisenstein(3, 5)
    with pytest.raises(InsufficientPrecision):
        eisenstein(4, 0)


def test_sigma():
    assert [sigma(n, 1) for n in range(1, 7)] == [1, 3, 4, 7, 6, 12]
    assert sigma(2, 3) == 9


def test_delta_and_j():
    d, j = delta_and_j(6)
    assert d[1] == 1 and d[2] == -24 and d[3] == 252
    assert [j[e] for e in (-1, 0, 1)] == [1, 744, 196884]
    assert d.agrees_with(delta_product(6))


def test_form_weights_add():
    f = eisenstein(4, 5) * eisenstein(6, 5)
    assert f.weight == 10
    with pytest.raises(InvalidWeight):
        eisenstein(4, 5) + eisenstein(6, 5)


def test_d_operator_examples():
    p = 16
    assert d_operator(E4(p)).agrees_with((E2(p) * E4(p) - E6(p)) / 3)
    assert d_operator(QSeries.one(p)).is_zero()
    assert (d_operator(delta(p)) / delta(p)).agrees_with(E2(p))


def test_serre_derivative_examples():
    p = 16
    assert serre_derivative(E2(p), 1).agrees_with(-E4(p) / 12)
    assert serre_derivative(E4(p), 4).agrees_with(-E6(p) / 3)
    assert serre_derivative(QSeries.one(p), 0).is_zero()
    tagged = serre_derivative(eisenstein(4, p), 4)
    assert tagged.weight == 6 and tagged.depth == 0


def test_serre_iterate_convention():
    p = 12
    twice = serre_derivative(E4(p), 4, iterate=2)
    assert twice.agrees_with(serre_derivative(serre_derivative(E4(p), 4), 6))
    assert twice.agrees_with(E4(p) * E4(p) / 6)


def test_hecke_examples():
    f = j_invariant(40) - 744
    assert hecke_weight_k(f, 1, 0).agrees_with(f)
    two = hecke_weight_k(f, 2, 0) * 2
    assert two.val == -2
    assert two.agrees_with(poly_in_j(faber_poly(0, 2).poly, two.prec))
    assert hecke_weight_k(delta(20), 2, 12)[1] == -24


def test_hecke_precision_is_pessimistic():
    f = j_invariant(21) - 744
    assert hecke_weight_k(f, 3, 0).prec == (21 - 1) // 3 + 1
    with pytest.raises(InsufficientPrecision):
        hecke_weight_k(QSeries([1], -3, -2), 2, 0)


def test_recognize_examples():
    p = 10
    assert recognize_poly_in_j(j_invariant(p)) == X
    assert recognize_poly_in_j(j_invariant(p) - 720) == X - 720
    assert recognize_poly_in_j(E4(p) ** 3 / delta(p) - E6(p) ** 2 / delta(p)) == Poly([1728])
    with pytest.raises(NotPolynomialInJ):
        recognize_poly_in_j(E2(p))


def test_property_suites():
    assert ramanujan_check(30).passed
    assert leibniz_check(30).passed
    assert hecke_composition_check(4, 41).passed
    assert integrality_check(30).passed


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(-30, 30), min_size=8, max_size=8),
    st.lists(st.integers(-30, 30), min_size=8, max_size=8),
    st.fractions(-10, 10, max_denominator=6),
    st.fractions(-10, 10, max_denominator=6),
)
def test_leibniz_on_random_series(a, b, k, l):
    assert leibniz_holds(QSeries(a, 0, 8), k, QSeries(b, 0, 8), l)


def test_concurrent_reads_agree():
    with ThreadPoolExecutor(max_workers=4) as ex:
        results = list(ex.map(lambda _: j_invariant(25), range(8)))
    assert all(r == results[0] for r in results)
