"""Generating series of Atkin inner products between Hecke images, Faber and Atkin polynomials."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .atkin import atkin_poly
from .errors import InconsistentRoutes, InvalidParams
from .extremal import G, normalizing_factor
from .faber import expansion_coeffs, faber_poly
from .functional import hecke_on_poly, inner_product
from .modforms import E2, E4, E6, delta, sigma, t_series
from .report import Report
from .series import BiSeries, Poly, QSeries

_X = Poly.X()


@lru_cache(maxsize=None)
def _h_by_hecke(n: int) -> Poly:
    return hecke_on_poly(_X - 720, n) * n


@lru_cache(maxsize=None)
def h_poly(n: int) -> Poly:
    """H_n = n (j - 720)|T_n, with H_0 = 1; equals F_{0,n} + 24 sigma_1(n)."""
    if n < 0:
        raise InvalidParams("H_n needs n >= 0")
    if n == 0:
        return Poly((1,))
    via_faber = faber_poly(0, n).poly + 24 * sigma(n, 1)
    if _h_by_hecke(n) != via_faber:
        raise InconsistentRoutes(f"H_{n}: Hecke image differs from F_0,{n} + 24 sigma_1({n})")
    return via_faber


def _series_from(values, val: int = 0) -> QSeries:
    return QSeries(list(values), val, val + len(values))


def _delta_pow(e: int, prec: int) -> QSeries:
    return delta(prec + max(0, -e) + 1) ** e


# ------------------------------------------------------------------ one variable

def prop51_sides(ell: int, prec: int) -> tuple[QSeries, QSeries]:
    """sum_n (H_n, A_l) p^n against N_{l,2} G_{12l+2} Delta^-l (or 1 when l = 0)."""
    A = atkin_poly(2, ell)
    lhs = _series_from([inner_product(h_poly(n), A, check=False) for n in range(prec)])
    if ell == 0:
        return lhs, QSeries.one(prec)
    pad = prec + ell + 2
    rhs = (G(12 * ell + 2, pad) * _delta_pow(-ell, pad) * normalizing_factor(ell, 2)).truncate(prec)
    return lhs, rhs


def cor52_i_sides(ell: int, prec: int) -> tuple[QSeries, QSeries]:
    """sum_{n>=1} (H_n, H_l) p^n against sum_r Omega_{0,l}(r) N_{r+1,2} G_{12r+14} Delta^-(r+1)."""
    if ell < 1:
        raise InvalidParams("needs l >= 1")
    H = h_poly(ell)
    lhs = _series_from([Fraction(0)] + [inner_product(h_poly(n), H, check=False) for n in range(1, prec)])
    coeffs = expansion_coeffs("Omega", 2, ell)
    pad = prec + ell + 3
    rhs = QSeries.zero(prec)
    for r in range(ell):
        term = G(12 * r + 14, pad) * _delta_pow(-(r + 1), pad) * (coeffs[r] * normalizing_factor(r + 1, 2))
        rhs = rhs + term.truncate(prec)
    return lhs, rhs


# ------------------------------------------------------------------ two variables

def _bi_from(table, P: int, Q: int) -> BiSeries:
    """BiSeries from a P x Q table of coefficients (outer p, inner q)."""
    return BiSeries([QSeries(list(row), 0, Q) for row in table], 0, P, "p", "q", Q)


def _bi_sum_of_products(terms, P: int, Q: int) -> BiSeries:
    """sum c * a(p) b(q) over (c, a, b)."""
    table = [[Fraction(0)] * Q for _ in range(P)]
    for c, a, b in terms:
        for i in range(P):
            ai = a[i]
            if ai:
                for k in range(Q):
                    table[i][k] += c * ai * b[k]
    return _bi_from(table, P, Q)


def gram_hh(P: int, Q: int) -> BiSeries:
    """sum_{n,l>=1} (H_n, H_l) p^n q^l."""
    table = [[Fraction(0)] * Q for _ in range(P)]
    for n in range(1, P):
        for ell in range(1, Q):
            table[n][ell] = inner_product(h_poly(n), h_poly(ell), check=False)
    return _bi_from(table, P, Q)


def gram_ff(P: int, Q: int) -> BiSeries:
    """sum_{n,l>=0} (F_{0,n}, F_{0,l}) p^n q^l."""
    table = [[inner_product(faber_poly(0, n).poly, faber_poly(0, ell).poly, check=False) for ell in range(Q)] for n in range(P)]
    return _bi_from(table, P, Q)


def cor52_ii_rhs(P: int, Q: int) -> BiSeries:
    pad = max(P, Q) + 2
    terms = []
    for r in range(min(P, Q)):
        g = (G(12 * r + 14, pad + r + 1) * _delta_pow(-(r + 1), pad + r + 1))
        terms.append((normalizing_factor(r + 1, 2), g, g))
    return _bi_sum_of_products(terms, P, Q)


def eq_ff_rhs(P: int, Q: int) -> BiSeries:
    """sum_r N_{r,2} G_{12r+2}(p) G_{12r+2}(q) (Delta(p) Delta(q))^-r."""
    pad = max(P, Q) + 2
    terms = []
    for r in range(min(P, Q)):
        g = G(12 * r + 2, pad + r) * _delta_pow(-r, pad + r)
        terms.append((normalizing_factor(r, 2), g, g))
    return _bi_sum_of_products(terms, P, Q)


def divide_by_p_minus_q(n, P: int, Q: int) -> list[list[Fraction]]:
    """Coefficients of N(p,q)/(p-q) for N vanishing on p = q.

    ``n(a, b)`` returns the p^a q^b coefficient; entries up to total degree
    P + Q - 1 are read.
    """
    out = [[Fraction(0)] * Q for _ in range(P)]
    for a in range(P):
        for b in range(Q):
            out[a][b] = sum((n(a + 1 + i, b - i) for i in range(b + 1)), Fraction(0))
    return out


def thm53_rhs(P: int, Q: int) -> BiSeries:
    """(psi(p,q) - psi(q,p)) / (1/j(p) - 1/j(q)) with psi(p,q) = E2(p) E6(q) / (j(p) E4(q))."""
    size = P + Q + 1
    t = t_series(size)
    a = E2(size) * t
    b = E6(size) / E4(size)

    def num(x, y):
        return a[x] * b[y] - a[y] * b[x]

    def den(x, y):
        return (t[x] if y == 0 else 0) - (t[y] if x == 0 else 0)

    nq = _bi_from(divide_by_p_minus_q(num, P, Q), P, Q)
    dq = _bi_from(divide_by_p_minus_q(den, P, Q), P, Q)
    return nq / dq


def section5_series(which: str, params: dict | None = None, prec: int = 5) -> Report:
    """Check one of prop51, cor52_i, cor52_ii, eqFFpq, thm53."""
    params = params or {}
    rep = Report(which)
    if which == "prop51":
        for ell in params.get("ell", (0, 1, 2, 3)):
            lhs, rhs = prop51_sides(ell, prec)
            rep.add(f"l={ell}", lhs.agrees_with(rhs), f"{lhs} vs {rhs}", order=prec)
            rep.add(f"l={ell} integral", lhs.is_integral())
    elif which == "cor52_i":
        for ell in params.get("ell", (1, 2, 3)):
            lhs, rhs = cor52_i_sides(ell, prec)
            rep.add(f"l={ell}", lhs.agrees_with(rhs), f"{lhs} vs {rhs}", order=prec)
    elif which == "cor52_ii":
        P = Q = prec
        rep.add(f"bi-order ({P},{Q})", gram_hh(P, Q).agrees_with(cor52_ii_rhs(P, Q)), order=prec)
    elif which == "eqFFpq":
        P = Q = prec
        rep.add(f"bi-order ({P},{Q})", gram_ff(P, Q).agrees_with(eq_ff_rhs(P, Q)), order=prec)
    elif which == "thm53":
        P = Q = prec
        rhs = thm53_rhs(P, Q)
        rep.add(f"bi-order ({P},{Q})", gram_ff(P, Q).agrees_with(rhs), order=prec)
        rep.add("closed form integral", all(c.denominator == 1 for row in rhs.box(P, Q) for c in row))
    else:
        raise InvalidParams(f"unknown series {which!r}")
    return rep


def h_poly_check(n_max: int) -> Report:
    rep = Report("H_n")
    for n in range(1, n_max + 1):
        rep.add(f"H_{n} Hecke = Faber + 24 sigma", _h_by_hecke(n) == faber_poly(0, n).poly + 24 * sigma(n, 1))
        rep.add(f"(H_{n}, 1) = 0", inner_product(_h_by_hecke(n), Poly((1,))) == 0)
    return rep
