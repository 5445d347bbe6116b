from math import comb

import pytest

from atkinlike.errors import UnsupportedWeight
from atkinlike.extremal import (
    OPERATOR_IDENTITIES,
    ROUTES,
    G,
    depth_decomposition,
    extremal_form,
    extremality_check,
    l_op,
    normalizing_factor,
    operator_identity_check,
    qm_dimension,
)
from atkinlike.modforms import E4, sigma


def test_normalizing_factor_examples():
    assert normalizing_factor(1, 0) == 24 * 15 * 924 == 332640
    assert normalizing_factor(1, 2) == 393120
    assert normalizing_factor(0, 2) == 1 and normalizing_factor(0, 0) == 1
    assert normalizing_factor(1, 6) == 12 * 3 * comb(9, 3) * comb(18, 9)


def test_normalizing_factor_aliases():
    for m in range(5):
        assert normalizing_factor(m, 4) == normalizing_factor(m, 0)
        assert normalizing_factor(m, 10) == normalizing_factor(m, 6)
        assert normalizing_factor(m, 14) == normalizing_factor(m + 1, 2)


def test_normalizing_factor_integrality():
    for m in range(10):
        assert normalizing_factor(m, 2).denominator == 1
        assert normalizing_factor(m, 8).denominator == 1


def test_g12_g14():
    g12, g14 = G(12, 8), G(14, 8)
    assert [g12[e] for e in range(8)] == [0, 0, 1, 56, 1002, 9296, 57708, 269040]
    assert [g14[e] for e in range(8)] == [0, 0, 1, 128, 4050, 58880, 525300, 3338496]


def test_g6_is_n_sigma3():
    g6 = G(6, 12)
    assert all(g6[n] == n * sigma(n, 3) for n in range(1, 12))
    assert g6[2] == 18


@pytest.mark.parametrize("route", ROUTES)
def test_each_route_gives_g12(route):
    assert extremal_form(12, 8, route) == G(12, 8)


def test_weight_four_and_odd_rejected():
    with pytest.raises(UnsupportedWeight):
        G(4, 8)
    with pytest.raises(UnsupportedWeight):
        G(7, 8)


def test_w_equiv_4_mod_12_is_e4_times_lower():
    assert G(16, 12).agrees_with(E4(12) * G(12, 12))
    assert G(28, 12).agrees_with(E4(12) * G(24, 12))


@pytest.mark.parametrize("w", [2, 6, 8, 10, 12, 14, 18, 26, 36, 50])
def test_extremality(w):
    assert extremality_check(w, 24).passed


def test_dimension_small_weights():
    assert [qm_dimension(w, 1) for w in (2, 6, 8, 10, 12, 14)] == [1, 2, 2, 2, 3, 3]


def test_kaneko_zagier_annihilates():
    for w in (6, 12, 18):
        assert l_op(w, G(w, 20)).is_zero()


@pytest.mark.parametrize("which", OPERATOR_IDENTITIES)
def test_operator_identities(which):
    assert operator_identity_check(which, [6, 12, 18, 24], 16).passed


def test_operator_identities_need_multiple_of_6():
    with pytest.raises(UnsupportedWeight):
        operator_identity_check("Kupup", [8], 10)


def test_depth_one_decomposition():
    f1, f0 = depth_decomposition(G(14, 20), 14)
    assert f1 and f0
