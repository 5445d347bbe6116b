from fractions import Fraction

import pytest

from atkinlike.errors import InvalidParams
from atkinlike.faber import inverse_series
from atkinlike.hypergeom import (
    HypParams,
    alpha_beta_polys,
    euler_transform_check,
    f1_of,
    g21_ode_residual,
    g21_series,
    hyp2f1,
    pfq_series,
)
from atkinlike.modforms import E4, t_series
from atkinlike.series import Poly, binomial_series

F = Fraction
X = Poly.X()


def test_2f1_first_coefficients():
    s = hyp2f1(F(1, 12), F(5, 12), 1, 4)
    assert s[0] == 1
    assert s[1] == F(5, 144)
    assert s[2] == F(1, 12) * F(13, 12) * F(5, 12) * F(17, 12) / 4


def test_prec_one_is_constant():
    assert pfq_series((F(1, 3), 2), (F(1, 2),), 1).coeffs == (1,)


def test_bad_parameters():
    with pytest.raises(InvalidParams):
        HypParams((1, 2), (0,))
    with pytest.raises(InvalidParams):
        HypParams((1,), (1,))
    with pytest.raises(InvalidParams):
        g21_series(-1, F(1, 2), 4)


def test_euler_transform():
    lhs = hyp2f1(F(1, 12), F(5, 12), 1, 20)
    rhs = binomial_series(F(1, 2), 20, "z", -1) * hyp2f1(F(11, 12), F(7, 12), 1, 20)
    assert lhs == rhs


@pytest.mark.parametrize(
    "a,b,c",
    [
        (F(1, 12), F(5, 12), 1),
        (F(-1, 12), F(7, 12), 1),
        (F(7, 12), F(11, 12), 1),
        (F(5, 12), F(13, 12), 1),
        (F(5, 12), F(13, 12), 2),
        (F(11, 12), F(19, 12), 3),
    ],
)
def test_euler_transform_triples(a, b, c):
    assert euler_transform_check(a, b, c, 16)


def test_g21_examples():
    g = g21_series(F(1, 12), F(5, 12), 6)
    assert g[0] == 0
    h = F(12) + F(12, 5) - 2
    assert g[1] == F(5, 144) * h


def test_g21_ode():
    assert g21_ode_residual(F(1, 12), F(5, 12), 16).is_zero()
    assert g21_ode_residual(F(1, 3), F(2, 7), 12).is_zero()


def test_mirror_map_744():
    _, q_of_t = inverse_series(4)
    assert q_of_t[2] == 744


def test_e4_from_hypergeometric():
    prec = 12
    z = t_series(prec) * 1728
    assert (f1_of(z) ** 4).agrees_with(E4(prec))


def test_alpha_beta_polys():
    assert alpha_beta_polys(0, "alpha0") == Poly([1])
    assert alpha_beta_polys(0, "beta") == Poly([1])
    assert alpha_beta_polys(1, "alpha0") == X + 60
    for n in range(6):
        for which in ("alpha0", "alpha1", "beta"):
            p = alpha_beta_polys(n, which)
            assert p.degree == n and p.is_monic()


def test_alpha0_coefficients_are_scaled_hypergeometric_terms():
    f = hyp2f1(F(1, 12), F(5, 12), 1, 8)
    for n in range(1, 7):
        p = alpha_beta_polys(n, "alpha0")
        for i in range(n + 1):
            assert p[n - i] == 12 ** (3 * i) * f[i]


def test_exp_ratio_gives_inverse_series():
    prec = 6
    _, q_of_t = inverse_series(prec)
    assert [q_of_t[n] for n in range(1, 6)] == [1, 744, 750420, 872769632, 1102652742882]
