from fractions import Fraction

import pytest

from atkinlike.atkin import (
    EXPANSION_FAMILIES,
    R_VALUES,
    adjoint_poly,
    atkin_poly,
    atkin_poly_closed,
    atkin_poly_recursive,
    christoffel_transform,
    class_poly,
    degree,
    expansion_identities_check,
    geronimus_step,
    recursion_a,
    recursion_coeffs,
    routes_agree,
    special_values,
)
from atkinlike.errors import IndexOutOfRange, NotMonic, PoleAtLambda, UnsupportedPair
from atkinlike.functional import adjoint_poly_from_moments, atkin_poly_from_moments
from atkinlike.series import Poly
from atkinlike.verify import INITIAL_POLYS, initial_polys_check

F = Fraction
X = Poly.X()


def test_recursion_coefficients():
    # a_{1,2} lies below the validity range; the formula itself still gives 920
    assert recursion_a(2, 1) == 920
    assert recursion_coeffs(2, 2)[1] == F(36 * 11 * 17 * 19 * 25, 2 * 1 * 9)
    assert recursion_coeffs(6, 1)[0] == F(24 * 283, 8)


def test_recursion_validity_edge():
    with pytest.raises(IndexOutOfRange):
        recursion_coeffs(2, 0)
    with pytest.raises(IndexOutOfRange):
        recursion_coeffs(6, 0)


def test_recursive_examples():
    assert atkin_poly_recursive(2, 1) == X - 720
    assert atkin_poly_recursive(2, 2) == X**2 - 1640 * X + 269280
    assert atkin_poly_recursive(0, 2, "B") == X**2 - 1832 * X + 497952
    assert atkin_poly(0, 0) == Poly()
    assert adjoint_poly(2, 0) == Poly()


def test_closed_examples():
    assert atkin_poly_closed(6, 1) == X - 1266
    assert atkin_poly_closed(8, 1) == X - 330
    assert atkin_poly_closed(0, 1, "B") == X - 1008


@pytest.mark.parametrize("key", sorted(INITIAL_POLYS))
def test_initial_poly_three_routes(key):
    fam, r, n = key
    want = INITIAL_POLYS[key]
    assert atkin_poly_recursive(r, n, fam).to_text() == want
    assert atkin_poly_closed(r, n, fam).to_text() == want
    by_moments = atkin_poly_from_moments(r, n) if fam == "A" else adjoint_poly_from_moments(r, n)
    assert by_moments.to_text() == want


def test_initial_polys_report():
    rep = initial_polys_check()
    assert len(rep) == 30 and rep.passed


def test_routes_agree_to_eight():
    assert routes_agree(8).passed


def test_monic_and_degrees():
    for r in R_VALUES:
        for n in range(0, 8):
            if (r, n) == (0, 0):
                continue
            A = atkin_poly(r, n)
            assert A.is_monic() and A.degree == degree(r, n)
            B = adjoint_poly(r, n)
            if (r, n) != (2, 0):
                assert B.is_monic()


def test_special_values():
    assert special_values(2, 1, 0) == -720 == atkin_poly(2, 1)(0)
    assert special_values(8, 1, 0) == -330 == atkin_poly(8, 1)(0)
    assert special_values(6, 1, 1728) == 462 == atkin_poly(6, 1)(1728)
    for n in range(1, 7):
        assert special_values(2, n, 0) == atkin_poly(2, n)(0)
        assert special_values(2, n, 1728) == atkin_poly(2, n)(1728)
        assert special_values(6, n, 1728) == atkin_poly(6, n)(1728)
        assert special_values(8, n, 0) == atkin_poly(8, n)(0)
    with pytest.raises(UnsupportedPair):
        special_values(6, 1, 0)


def test_christoffel_examples():
    A = atkin_poly
    assert christoffel_transform(A(2, 1), A(2, 2), 0) == A(6, 1)
    assert christoffel_transform(A(2, 1), A(2, 2), 1728) == A(8, 1)
    assert christoffel_transform(A(6, 1), A(6, 2), 1728) == A(0, 2)


def test_christoffel_errors():
    with pytest.raises(PoleAtLambda):
        christoffel_transform(X - 5, X**2, 5)
    with pytest.raises(NotMonic):
        christoffel_transform(atkin_poly(0, 0), atkin_poly(0, 1), 0)


def test_christoffel_small_example():
    # (X^2 + 3 - 7 (X - 1)) / (X - 2)
    assert christoffel_transform(X - 1, X**2 + 3, 2) == X - 5


def test_geronimus_example():
    assert geronimus_step(1) == X - 720
    assert atkin_poly(6, 1) + 546 == X - 720


@pytest.mark.parametrize("which", EXPANSION_FAMILIES)
def test_expansion_identities(which):
    rep = expansion_identities_check(which, 6)
    assert len(rep) > 0
    assert rep.passed, rep.failures()


def test_c_coeff_sum_sides_initial_value():
    rep = expansion_identities_check("c_coeff_sum", 0)
    assert rep.passed and len(rep) == 1


def test_class_aliases():
    assert class_poly(4, 3) == atkin_poly(0, 3)
    assert class_poly(10, 2) == atkin_poly(6, 2)
    assert class_poly(14, 1) == atkin_poly(2, 2)
    assert class_poly(14, -1) == Poly([1])
