from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atkinlike.atkin import adjoint_poly, atkin_poly
from atkinlike.errors import InsufficientPrecision
from atkinlike.extremal import normalizing_factor
from atkinlike.functional import (
    _MomentCache,
    apply_functional,
    bareiss_det,
    hankel_check,
    hecke_self_adjoint_check,
    image_formulas_check,
    inner_product,
    lstar_check,
    lstar_moment,
    lstar_series,
    moment,
    moments,
    orthogonal_poly,
    orthogonality_suite,
    residue_functional,
    stieltjes_check,
    stieltjes_series,
)
from atkinlike.series import Poly

F = Fraction
X = Poly.X()
FIRST_MOMENTS = [1, 720, 911520, 1301011200, 1958042030400]


def test_first_moments():
    assert list(moments(5).moments) == FIRST_MOMENTS
    assert moment(1) == 720


def test_moment_budget():
    with pytest.raises(InsufficientPrecision):
        moment(3, prec_budget=4)
    assert moment(3, prec_budget=5) == FIRST_MOMENTS[3]


def test_two_routes_agree_on_monomials():
    for n in range(8):
        assert apply_functional(X**n) == residue_functional(X**n)


def test_inner_product_examples():
    a1, a2 = atkin_poly(2, 1), atkin_poly(2, 2)
    assert inner_product(a1, a1) == 393120 == normalizing_factor(1, 2)
    assert inner_product(a1, a2) == 0
    assert inner_product(Poly([1]), Poly([1])) == 1


def test_inner_product_symmetric_bilinear():
    f, g, h = X**2 - 3, X + F(1, 2), 4 * X**3 - X
    assert inner_product(f, g) == inner_product(g, f)
    assert inner_product(f + h, g) == inner_product(f, g) + inner_product(h, g)


def test_stieltjes():
    s = stieltjes_series(6)
    assert [s[e] for e in range(1, 5)] == [1, -24, 196812, 38262208]
    assert stieltjes_check(16).passed


def test_lstar_first_values():
    assert [lstar_moment(n) for n in range(5)] == [1, 920, 1024050, 1261043280, 1653817332720]


@pytest.mark.parametrize("route", ["hypergeometric", "definition"])
def test_lstar_routes(route):
    assert lstar_series(10, route).agrees_with(lstar_series(10, "extremal"))


def test_lstar_orthogonality():
    assert lstar_check(10).passed


def test_orthogonality_and_norms():
    rep = orthogonality_suite(5, check_residue=True)
    assert rep.passed, rep.failures()


def test_hankel_positive():
    assert hankel_check(7).passed
    assert moments(3).hankel_determinant(1) == 1
    assert moments(3).hankel_determinant(2) == 911520 - 720**2


def test_bareiss_matches_hand_determinant():
    assert bareiss_det([[2, 3], [5, 7]]) == -1
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    assert bareiss_det([[1, 2, 3], [4, 5, 6], [7, 8, 9]]) == 0


def test_hecke_self_adjoint():
    assert hecke_self_adjoint_check(4).passed


def test_image_formulas():
    rep = image_formulas_check(3, 10)
    assert rep.passed, rep.failures()


def test_orthogonal_poly_recovers_family():
    for n in range(5):
        assert orthogonal_poly(Poly([1]), n) == atkin_poly(2, n)
        assert orthogonal_poly(X, n) == atkin_poly(6, n)


def test_adjoint_family_is_orthogonal_for_lstar():
    # the second family starts one degree lower: B_1 = 1, B_2 = X - 920
    assert adjoint_poly(2, 1) == Poly([1])
    assert adjoint_poly(2, 2) == X - 920


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 40), min_size=1, max_size=6))
def test_cache_is_prefix_consistent(counts):
    cache = _MomentCache()
    full = cache.get(41)
    for c in counts:
        assert cache.get(c) == full[:c]


def test_cache_thread_safe():
    cache = _MomentCache()
    with ThreadPoolExecutor(max_workers=6) as ex:
        out = list(ex.map(cache.get, [10, 25, 5, 25, 18, 30]))
    ref = cache.get(30)
    assert all(o == ref[: len(o)] for o in out)
