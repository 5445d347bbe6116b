import pytest

from atkinlike.errors import InvalidParams
from atkinlike.faber import faber_poly
from atkinlike.gram import (
    cor52_i_sides,
    divide_by_p_minus_q,
    gram_ff,
    h_poly,
    h_poly_check,
    prop51_sides,
    section5_series,
    thm53_rhs,
)
from atkinlike.series import Poly, QSeries

X = Poly.X()


def printed(coeffs, prec):
    return QSeries([0] + coeffs, 0, prec)


def test_h_examples():
    assert h_poly(0) == Poly([1])
    assert h_poly(1) == X - 720
    assert h_poly(2) == faber_poly(0, 2).poly + 72
    with pytest.raises(InvalidParams):
        h_poly(-1)


def test_h_two_routes():
    assert h_poly_check(5).passed


def test_inner_products_with_a1_printed():
    lhs, rhs = prop51_sides(1, 5)
    want = printed([393120, 59754240, 2927171520, 78919626240], 5)
    assert lhs.agrees_with(want) and rhs.agrees_with(want)


def test_gram_of_h_printed():
    lhs, rhs = cor52_i_sides(2, 4)
    want = printed([59754240, 78920412480, 20222985968640], 4)
    assert lhs.agrees_with(want) and rhs.agrees_with(want)


def test_gram_of_h_symmetric_in_index():
    # (H_n, H_1) for n = 2 equals (H_1, H_2), the first entry at l = 2
    lhs1, _ = cor52_i_sides(1, 3)
    lhs2, _ = cor52_i_sides(2, 2)
    assert lhs1[2] == lhs2[1]


def test_prop_weight_zero_is_one():
    lhs, rhs = prop51_sides(0, 5)
    assert lhs == rhs == QSeries.one(5)


@pytest.mark.parametrize("which", ["prop51", "cor52_i", "cor52_ii", "eqFFpq", "thm53"])
def test_section_series(which):
    rep = section5_series(which, prec=5)
    assert rep.passed, rep.failures()


def test_closed_form_matches_gram_series():
    rhs = thm53_rhs(5, 5)
    assert gram_ff(5, 5).agrees_with(rhs)
    for row in rhs.box(5, 5):
        assert all(c.denominator == 1 for c in row)


def test_division_by_p_minus_q():
    # (p^2 - q^2) / (p - q) = p + q
    def num(a, b):
        return {(2, 0): 1, (0, 2): -1}.get((a, b), 0)

    out = divide_by_p_minus_q(num, 3, 3)
    assert out[1][0] == 1 and out[0][1] == 1
    assert sum(abs(c) for row in out for c in row) == 2


def test_unknown_series():
    with pytest.raises(InvalidParams):
        section5_series("nope")
