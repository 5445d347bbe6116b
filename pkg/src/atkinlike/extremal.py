"""Normalised extremal quasimodular forms G_w of depth 1.

G_w is the form q^(m-1) (1 + O(q)) in the depth-one space of weight w, where
m is the dimension of that space.  Four independent constructions are
available; they must agree.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import comb

from .atkin import adjoint_poly, atkin_poly, dim_modular
from .errors import IndexBelowRange, InsufficientPrecision, UnsupportedPair, UnsupportedWeight
from .hypergeom import f1_of, hyp_of
from .modforms import E2, E4, E6, delta, t_series
from .report import Report
from .series import Poly, QSeries, to_rat

INTEGRAL_WEIGHTS = (2, 6, 8, 10, 12, 14)
ROUTES = ("diff_recursion", "linear_recursion", "ab_polys", "hypergeometric")


# --------------------------------------------------------- normalisation

def _n0(m: Fraction) -> Fraction:
    if m == 0:
        return Fraction(1)
    two_m = 2 * m
    if two_m.denominator != 1 or m < 0:
        raise IndexBelowRange(f"normalising factor undefined at m={m}")
    return 24 * m * comb(int(6 * m), int(2 * m)) * comb(int(12 * m), int(6 * m))


def _n2(m: Fraction) -> Fraction:
    if m == 0:
        return Fraction(1)
    return (12 * m + 1) / (12 * m - 1) * _n0(m)


def normalizing_factor(m, r: int) -> Fraction:
    """N_{m,r}; r may also be one of the alias labels 4, 10, 14."""
    m = to_rat(m)
    half = Fraction(1, 2)
    if r == 14:
        return normalizing_factor(m + 1, 2)
    if m < 0:
        raise IndexBelowRange(f"N_{{{m},{r}}} needs m >= 0")
    if r in (0, 4):
        return _n0(m)
    if r == 2:
        return _n2(m)
    if r in (6, 10):
        return _n0(m + half)
    if r == 8:
        return _n2(m + half)
    raise UnsupportedPair(f"no normalising factor for r={r}")


# -------------------------------------------------------------- dimensions

@lru_cache(maxsize=None)
def _dim_series(depth: int, prec: int) -> QSeries:
    # sum dim QM^(depth)_{2n} x^n = (1 - x^(depth+1)) / ((1-x)(1-x^2)(1-x^3))
    x = "x"
    num = QSeries([1] + [0] * depth + [-1], 0, prec, x) if depth + 1 < prec else QSeries.one(prec, x)
    den = QSeries([1, -1], 0, prec, x) * QSeries([1, 0, -1], 0, prec, x) * QSeries([1, 0, 0, -1], 0, prec, x)
    return num / den


def qm_dimension(w: int, depth: int = 1) -> int:
    """Dimension of quasimodular forms of weight w and depth <= depth."""
    if w < 0 or w % 2:
        return 0
    n = w // 2
    return int(_dim_series(depth, max(n + 1, 8))[n])


def depth_one_dimension(w: int) -> int:
    """Closed form: dim M_w + dim M_{w-2}."""
    return dim_modular(w) + dim_modular(w - 2)


# ------------------------------------------------------------- operators

def _ser(f: QSeries, k) -> QSeries:
    """Serre derivative of weight k."""
    return f.theta() - E2(max(f.prec, 1)) * f * (to_rat(k) / 12)


def _e(k: int, f: QSeries) -> QSeries:
    return {4: E4, 6: E6}[k](max(f.prec, 1))


def k_up(w, f: QSeries) -> QSeries:
    return _e(4, f) * _ser(f, w - 1) - _e(6, f) * f * (to_rat(w + 1) / 12)


def k_up2(w, f: QSeries) -> QSeries:
    return _e(4, f) * _ser(f, w + 1) - _e(6, f) * f * (to_rat(w - 1) / 12)


def l_op(w, f: QSeries) -> QSeries:
    return _ser(_ser(f, w - 1), w + 1) - _e(4, f) * f * (to_rat(w * w - 1) / 144)


def l_op2(w, f: QSeries) -> QSeries:
    d1 = _ser(f, w + 1)
    e4 = _e(4, f)
    return e4 * _ser(d1, w + 3) + _e(6, f) * d1 / 3 - e4 * e4 * f * (to_rat(w * w - 1) / 144)


# ------------------------------------------------------------------ routes

def _check_weight(w: int) -> None:
    if w < 0 or w % 2:
        raise UnsupportedWeight(f"no extremal form of weight {w}")
    if w == 4:
        raise UnsupportedWeight("weight 4 has no depth-one extremal form")


@lru_cache(maxsize=None)
def _diff(w: int, prec: int) -> QSeries:
    if w == 0:
        return QSeries.one(prec)
    r = w % 6
    if r == 0:
        b = w - 6
        return k_up(b, _diff(b, prec)) * Fraction(b + 6, 72 * (b + 1) * (b + 5))
    if r == 2:
        b = w - 2
        return _ser(_diff(b, prec), b - 1) * Fraction(12, b + 1)
    return E4(prec) * _diff(w - 4, prec)


@lru_cache(maxsize=None)
def _linear(w: int, prec: int) -> QSeries:
    e2, e4, e6 = E2(prec), E4(prec), E6(prec)
    seeds = {0: QSeries.one(prec), 2: e2, 6: (e2 * e4 - e6) / 720, 8: (e4 * e4 - e2 * e6) / 1008}
    if w in seeds:
        return seeds[w]
    r = w % 6
    if r == 4:
        return e4 * _linear(w - 4, prec)
    d = delta(prec)
    if r == 0:
        b = w - 12
        c = Fraction(-(b + 6) * (b + 12), 432 * (b + 7) * (b + 11))
        return (e6 * _linear(b + 6, prec) - d * _linear(b, prec)) * c
    b = w - 14
    c = Fraction(-(b + 6) * (b + 12), 432 * (b + 5) * (b + 13))
    return (e6 * _linear(b + 8, prec) - d * _linear(b + 2, prec)) * c


def _homog(P: Poly, e: int, prec: int) -> QSeries:
    """P(j) Delta^e written as sum c_i E4^(3i) Delta^(e-i) (needs deg P <= e)."""
    if not P:
        return QSeries.zero(prec)
    if P.degree > e:
        raise ValueError("polynomial degree exceeds the available power of Delta")
    e4c = E4(prec) ** 3
    d = delta(prec)
    out = QSeries.zero(prec)
    for i, c in enumerate(P.coeffs):
        if c:
            out = out + (e4c**i) * (d ** (e - i)) * c
    return out


@lru_cache(maxsize=None)
def _ab(w: int, prec: int) -> QSeries:
    e2, e4, e6 = E2(prec), E4(prec), E6(prec)
    if w == 0:
        return QSeries.one(prec)
    m, r = divmod(w, 12)
    if r in (4, 10):
        return e4 * _ab(w - 4, prec)
    N = normalizing_factor(m, r)
    A, B = atkin_poly(r, m), adjoint_poly(r, m)
    if r == 0:
        num = -(e2 * e4 * e6 * _homog(A, m - 1, prec)) + _homog(B, m, prec)
    elif r == 2:
        num = e2 * _homog(A, m, prec) - e4 * e4 * e6 * _homog(B, m - 1, prec) if B else e2 * _homog(A, m, prec)
    elif r == 6:
        num = e2 * e4 * _homog(A, m, prec) - e6 * _homog(B, m, prec)
    else:
        num = -(e2 * e6 * _homog(A, m, prec)) + e4 * e4 * _homog(B, m, prec)
    return num / N


@lru_cache(maxsize=None)
def _hyp(w: int, prec: int) -> QSeries:
    t = t_series(prec)
    z = t * 1728
    F = f1_of(z)
    n, r = divmod(w, 6)
    if r == 4:
        return F**4 * _hyp(w - 4, prec)
    if r == 0:
        body = F ** (6 * n - 1) * hyp_of(Fraction(6 * n + 1, 12), Fraction(6 * n + 5, 12), n + 1, z)
    else:
        body = F ** (6 * n + 1) * hyp_of(Fraction(6 * n - 1, 12), Fraction(6 * n + 7, 12), n + 1, z)
    return (body * t**n).truncate(prec)


_ROUTE_FUNCS = {"diff_recursion": _diff, "linear_recursion": _linear, "ab_polys": _ab, "hypergeometric": _hyp}


def extremal_form(w: int, prec: int, route: str = "diff_recursion") -> QSeries:
    """G_w to O(q^prec) by the chosen construction."""
    _check_weight(w)
    if route not in _ROUTE_FUNCS:
        raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")
    if prec < 1:
        raise InsufficientPrecision("precision must be positive")
    s = _ROUTE_FUNCS[route](w, prec)
    if s.prec < prec:
        raise InsufficientPrecision(f"route {route} lost precision ({s.prec} < {prec})")
    return s.truncate(prec)


def G(w: int, prec: int) -> QSeries:
    """Shorthand for the differential-recursion construction."""
    return extremal_form(w, prec, "diff_recursion")


def routes_agree(weights, prec: int) -> Report:
    rep = Report("extremal routes")
    for w in weights:
        ref = extremal_form(w, prec, ROUTES[0])
        for route in ROUTES[1:]:
            rep.add(f"G_{w} {route}", extremal_form(w, prec, route) == ref, order=prec)
    return rep


def extremality_check(w: int, prec: int) -> Report:
    """Leading exponent equals dim - 1 and leading coefficient 1.

    Integrality is only asserted for the small weights where it is known.
    """
    rep = Report(f"G_{w} shape")
    g = G(w, prec)
    m = qm_dimension(w, 1)
    rep.add("dimension formula", m == depth_one_dimension(w))
    rep.add("valuation", g.true_valuation() == m - 1, f"{g.true_valuation()} vs {m - 1}")
    rep.add("leading coefficient", g.leading() == 1)
    if w in INTEGRAL_WEIGHTS:
        rep.add("integral", g.is_integral())
    return rep


# ------------------------------------------------------- depth decomposition

def _monomials(k: int) -> list[tuple[int, int]]:
    return [(a, b) for b in range(0, k // 6 + 1) for a in range(0, k // 4 + 1) if 4 * a + 6 * b == k]


def _solve(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Exact solution of a consistent (possibly overdetermined) system, else None."""
    n = len(rows[0]) if rows else 0
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    piv_cols = []
    row = 0
    for col in range(n):
        p = next((i for i in range(row, len(M)) if M[i][col] != 0), None)
        if p is None:
            continue
        M[row], M[p] = M[p], M[row]
        pv = M[row][col]
        M[row] = [v / pv for v in M[row]]
        for i in range(len(M)):
            if i != row and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[row])]
        piv_cols.append(col)
        row += 1
    if any(all(v == 0 for v in r[:-1]) and r[-1] != 0 for r in M):
        return None
    if len(piv_cols) < n:
        return None
    sol = [Fraction(0)] * n
    for i, col in enumerate(piv_cols):
        sol[col] = M[i][-1]
    return sol


def depth_decomposition(f: QSeries, w: int) -> tuple[dict, dict]:
    """Solve f = E2 f1 + f0 with f1 in M_{w-2}, f0 in M_w.

    Returns the coefficients of f1 and f0 on the monomials E4^a E6^b.
    """
    prec = f.prec
    basis1 = _monomials(w - 2)
    basis0 = _monomials(w)
    cols = []
    e2, e4, e6 = E2(prec), E4(prec), E6(prec)
    for a, b in basis1:
        cols.append(e2 * e4**a * e6**b)
    for a, b in basis0:
        cols.append(e4**a * e6**b)
    if prec < len(cols) + 1:
        raise InsufficientPrecision("not enough coefficients to determine the decomposition")
    rows = [[c[e] for c in cols] for e in range(prec)]
    sol = _solve(rows, [f[e] for e in range(prec)])
    if sol is None:
        raise ValueError("series is not a depth-one quasimodular form of this weight")
    k1 = len(basis1)
    return dict(zip(basis1, sol[:k1])), dict(zip(basis0, sol[k1:]))


# ---------------------------------------------------------- identity checks

OPERATOR_IDENTITIES = ("L_annihilates", "Kupup", "partialKup", "L2", "Kup2_step", "linrec24", "linrec26")


def _test_series(prec: int, seed: int = 7) -> QSeries:
    rng = random.Random(seed)
    return QSeries([Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(prec)], 0, prec)


def operator_identity_check(which: str, w_list, prec: int = 20) -> Report:
    """Differential-operator identities, applied to G_w and to an arbitrary series."""
    rep = Report(which)
    for w in w_list:
        if w % 6:
            raise UnsupportedWeight("operator identities are stated for w = 0 mod 6")
        g = G(w, prec)
        probes = [("G", g), ("random", _test_series(prec, seed=w + 1))]
        d = delta(prec)
        e4, e6 = E4(prec), E6(prec)
        if which == "L_annihilates":
            rep.add(f"w={w}", l_op(w, g).is_zero(), order=prec)
        elif which == "Kupup":
            for name, f in probes:
                lhs = k_up(w + 6, k_up(w, f))
                rhs = e4 * e4 * l_op(w, f) - e6 * k_up(w, f) * Fraction(w + 6, 6) + d * f * (12 * (w + 1) * (w + 5))
                rep.add(f"w={w} {name}", lhs.agrees_with(rhs), order=prec)
        elif which == "partialKup":
            if w == 1:
                continue
            for name, f in probes:
                lhs = _ser(k_up(w, f), w + 5)
                rhs = e4 * l_op(w, f) * Fraction(-6, w - 1) + k_up2(w, _ser(f, w - 1)) * Fraction(w + 5, w - 1)
                rep.add(f"w={w} {name}", lhs.agrees_with(rhs), order=prec)
        elif which == "L2":
            rep.add(f"w={w} kills G_{w + 2}", l_op2(w, G(w + 2, prec)).is_zero(), order=prec)
            for name, f in probes:
                lhs = l_op2(w, _ser(f, w - 1))
                lf = l_op(w, f)
                rhs = e4 * _ser(lf, w + 3) + e6 * lf / 3
                rep.add(f"w={w} {name} intertwines", lhs.agrees_with(rhs), order=prec)
        elif which == "Kup2_step":
            if w == 0:
                continue
            lhs = G(w + 8, prec)
            rhs = k_up2(w, G(w + 2, prec)) * Fraction(w + 6, 72 * (w - 1) * (w + 7))
            rep.add(f"w={w}", lhs.agrees_with(rhs), order=prec)
        elif which in ("linrec24", "linrec26"):
            off = 0 if which == "linrec24" else 2
            const = 103 if off == 0 else 115
            lo = (w + 13, w + 17, w + 19, w + 23) if off == 0 else (w + 11, w + 17, w + 19, w + 25)
            c = Fraction((w + 12) * (w + 18) ** 2 * (w + 24), 2**8 * 3**6 * lo[0] * lo[1] * lo[2] * lo[3])
            inner = e4**3 - d * Fraction(864 * (w * w + 24 * w + const), (w + 6) * (w + 18))
            rhs = (inner * G(w + 12 + off, prec) - d * d * G(w + off, prec)) * c
            rep.add(f"w={w}", G(w + 24 + off, prec).agrees_with(rhs), order=prec)
        else:
            raise ValueError(f"unknown identity {which!r}")
    return rep
