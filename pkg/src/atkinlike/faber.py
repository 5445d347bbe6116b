"""Generalized Faber polynomials F_{k,n} and their expansions in Atkin-like polynomials.

For k = 12m + 4*delta + 6*eps the form f_{k,l} = E4^delta E6^eps Delta^m F_{k,l+m}(j)
is the unique weakly holomorphic form q^-l + O(q^(m+1)) of weight k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .atkin import class_index_range, class_poly
from .errors import IndexBelowRange, InconsistentRoutes, InvalidParams, OddWeight
from .extremal import G, normalizing_factor
from .functional import CLASS_DATA, apply_functional
from .hypergeom import F1_PARAMS, g21_series, hyp2f1
from .modforms import E4, E6, delta, j_invariant, j_power, poly_in_j, t_series
from .report import Report
from .series import BiSeries, Poly, QSeries, binomial_series, compose, exp, power, reversion

FABER_ROUTES = ("genfunc", "recognition", "hypergeometric")


@dataclass(frozen=True)
class WeightDecomp:
    k: int
    m: int
    delta: int
    eps: int

    @property
    def label(self) -> int:
        """Index label 4*delta + 6*eps of the matching Atkin-like class."""
        return 4 * self.delta + 6 * self.eps

    def dual(self) -> WeightDecomp:
        return weight_decompose(2 - self.k)


_RESIDUE_SPLIT = {0: (0, 0), 2: (2, 1), 4: (1, 0), 6: (0, 1), 8: (2, 0), 10: (1, 1)}


def weight_decompose(k: int) -> WeightDecomp:
    if k % 2:
        raise OddWeight(f"weight {k} is odd")
    d, e = _RESIDUE_SPLIT[k % 12]
    return WeightDecomp(k, (k - 4 * d - 6 * e) // 12, d, e)


@dataclass(frozen=True)
class FaberPoly:
    k: int
    n: int
    poly: Poly

    def is_integral_monic(self) -> bool:
        return self.poly.degree == self.n and self.poly.is_monic() and all(c.denominator == 1 for c in self.poly.coeffs)


# ------------------------------------------------------------------ routes

def _prefactor(w: WeightDecomp, prec: int) -> QSeries:
    """E4^delta E6^eps Delta^m."""
    return E4(prec) ** w.delta * E6(prec) ** w.eps * delta(prec + max(0, -w.m)) ** w.m


def _via_genfunc(k: int, n: int) -> Poly:
    # sum_n F_{k,n}(X) p^(n-m) = Phi(p) sum_i X^i t(p)^(i+1)
    w = weight_decompose(k)
    target = n - w.m
    prec = target + 1
    pad = prec + abs(w.m + 1) + 2
    phi = E4(pad) ** (2 - w.delta) * E6(pad) ** (1 - w.eps) * delta(pad + w.m + 1) ** (-(w.m + 1))
    t = t_series(pad)
    coeffs = []
    tp = t
    for _ in range(n + 1):
        coeffs.append((phi * tp)[target])
        tp = tp * t
    return Poly(coeffs)


def _via_recognition(k: int, n: int) -> Poly:
    # row reduction of E4^delta E6^eps Delta^m j^i against q^(m-i), i = n .. 0
    w = weight_decompose(k)
    prec = w.m + 2
    base = _prefactor(w, prec + n + 1)
    basis = [base * j_power(i, prec + n + 1) for i in range(n + 1)]
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    f = basis[n]
    for i in range(n - 1, -1, -1):
        c = f[w.m - i]
        if c:
            coeffs[i] = -c
            f = f - basis[i] * c
    return Poly(coeffs)


def _hyp_t(prec: int) -> tuple[QSeries, QSeries]:
    f1 = hyp2f1(*F1_PARAMS, 1, prec, "t").scale_var(1728)
    g1 = g21_series(*F1_PARAMS, prec, "t").scale_var(1728)
    return f1, g1


def _via_hypergeometric(k: int, n: int) -> Poly:
    w = weight_decompose(k)
    ell = n - w.m
    prec = n + 1
    f1, g1 = _hyp_t(prec)
    s = power(f1, -k) * exp(g1 / f1 * (-ell))
    if w.eps:
        s = s * binomial_series(Fraction(-1, 2), prec, "t", -1728)
    return Poly([s[n - i] for i in range(n + 1)])


_ROUTE_FUNCS = {"genfunc": _via_genfunc, "recognition": _via_recognition, "hypergeometric": _via_hypergeometric}


@lru_cache(maxsize=None)
def _faber(k: int, n: int, route: str) -> Poly:
    return _ROUTE_FUNCS[route](k, n)


def faber_poly(k: int, n: int, route: str = "genfunc") -> FaberPoly:
    """F_{k,n}(X), monic of degree n."""
    if n < 0:
        raise InvalidParams("degree must be non-negative")
    weight_decompose(k)
    if route not in _ROUTE_FUNCS:
        raise InvalidParams(f"unknown route {route!r}")
    return FaberPoly(k, n, _faber(k, n, route))


def faber_form(k: int, ell: int, prec: int) -> QSeries:
    """f_{k,l} = q^-l + O(q^(m+1)) to O(q^prec); the gap is checked."""
    w = weight_decompose(k)
    if ell < -w.m:
        raise IndexBelowRange(f"f_{{{k},{ell}}} needs l >= {-w.m}")
    F = faber_poly(k, ell + w.m).poly
    pad = max(prec, w.m + 2)
    f = (_prefactor(w, pad + ell + w.m + 1) * poly_in_j(F, pad + ell + w.m + 1)).truncate(pad)
    for e in range(-ell, w.m + 1):
        want = 1 if e == -ell else 0
        if f[e] != want:
            raise InconsistentRoutes(f"f_{{{k},{ell}}} breaks the gap at q^{e}")
    return f.truncate(prec) if prec > -ell else f


def faber_routes_check(k_values, n_max: int) -> Report:
    rep = Report("faber routes")
    for k in k_values:
        for n in range(n_max + 1):
            ref = faber_poly(k, n, "genfunc")
            rep.add(f"F_{k},{n} integral monic", ref.is_integral_monic())
            for route in ("recognition", "hypergeometric"):
                rep.add(f"F_{k},{n} genfunc = {route}", faber_poly(k, n, route).poly == ref.poly)
    return rep


# ------------------------------------------------------- expansion coefficients

@dataclass(frozen=True)
class ExpansionCoeffs:
    kind: str
    k: int
    n: int
    values: dict = field(default_factory=dict)

    def __getitem__(self, r: int) -> Fraction:
        return self.values.get(r, Fraction(0))

    @property
    def label(self) -> int:
        return weight_decompose(self.k).label

    def reconstruct(self) -> Poly:
        out = Poly()
        for r, c in self.values.items():
            out = out + class_poly(self.label, r) * c
        return out

    def target(self) -> Poly:
        kk = self.k if self.kind == "omega" else 2 - self.k
        return faber_poly(kk, self.n).poly


def _target(kind: str, k: int, n: int) -> Poly:
    if kind == "omega":
        return faber_poly(k, n).poly
    if kind == "Omega":
        return faber_poly(2 - k, n).poly
    raise InvalidParams(f"unknown kind {kind!r}")


def _by_inner_products(label: int, F: Poly, n: int) -> dict:
    wpoly, sign, _ = CLASS_DATA[label]
    out = {}
    for r in class_index_range(label, n):
        out[r] = apply_functional(wpoly * class_poly(label, r) * F) / (sign * normalizing_factor(r, label))
    return out


def _by_triangular_solve(label: int, F: Poly, n: int) -> dict:
    rem = F
    out = {}
    for r in reversed(class_index_range(label, n)):
        A = class_poly(label, r)
        c = rem.coeffs[A.degree] if A.degree <= rem.degree else Fraction(0)
        out[r] = c
        if c:
            rem = rem - A * c
    if rem:
        raise InconsistentRoutes("triangular expansion left a remainder")
    return out


@lru_cache(maxsize=None)
def _expansion(kind: str, k: int, n: int) -> tuple:
    label = weight_decompose(k).label
    F = _target(kind, k, n)
    vals = _by_inner_products(label, F, n)
    oracle = _by_triangular_solve(label, F, n)
    if vals != oracle:
        raise InconsistentRoutes(f"{kind}_{k},{n}: inner products disagree with the triangular solve")
    return tuple(sorted(vals.items()))


def expansion_coeffs(kind: str, k: int, n: int) -> ExpansionCoeffs:
    """omega_{k,n}(r) (kind='omega') or Omega_{2-k,n}(r) (kind='Omega'), keyed by r."""
    if n < 0:
        raise InvalidParams("degree must be non-negative")
    return ExpansionCoeffs(kind, k, n, dict(_expansion(kind, k, n)))


def omega(k: int, n: int, r: int) -> Fraction:
    return expansion_coeffs("omega", k, n)[r]


def big_omega(k: int, n: int, r: int) -> Fraction:
    """Omega_{k,n}(r), the coefficient in the class of weight 2 - k."""
    return expansion_coeffs("Omega", 2 - k, n)[r]


def valid_ell(w: WeightDecomp, ell: int) -> bool:
    weight = 12 * ell + w.label
    return weight >= 2 and weight != 4


def omega_series(k: int, ell: int, prec: int) -> QSeries:
    """sum_n omega_{k,n}(l) p^(n-m), from the expansion coefficients."""
    w = weight_decompose(k)
    return QSeries([omega(k, n, ell) for n in range(prec + w.m)], -w.m, prec, "q")


def big_omega_series(k: int, ell: int, prec: int) -> QSeries:
    """sum_n Omega_{2-k,n}(l) p^(n+m+1)."""
    w = weight_decompose(k)
    v = w.m + 1
    count = max(prec - v, 0)
    return QSeries([expansion_coeffs("Omega", k, n)[ell] for n in range(count)], v, max(prec, v + 1), "q")


def omega_form_series(k: int, ell: int, prec: int) -> QSeries:
    """E4^(2-2delta) E6^(1-2eps) Delta^-(l+m+1) G_{12l+4delta+6eps}."""
    w = weight_decompose(k)
    wt = 12 * ell + w.label
    pad = prec + abs(ell + w.m + 1) + 2
    s = E4(pad) ** (2 - 2 * w.delta) * E6(pad) ** (1 - 2 * w.eps) * delta(pad) ** (-(ell + w.m + 1)) * G(wt, pad)
    return s.truncate(prec)


def big_omega_form_series(k: int, ell: int, prec: int) -> QSeries:
    """Delta^(m-l) G_{12l+4delta+6eps}."""
    w = weight_decompose(k)
    wt = 12 * ell + w.label
    pad = prec + abs(w.m - ell) + 2
    return (delta(pad) ** (w.m - ell) * G(wt, pad)).truncate(prec)


def fourier_coeff_theorem_check(ell: int, k: int, prec: int) -> Report:
    w = weight_decompose(k)
    if not valid_ell(w, ell):
        raise InvalidParams(f"12*{ell} + {w.label} is not an admissible weight")
    rep = Report(f"fourier coefficients k={k} l={ell}")
    a, b = omega_series(k, ell, prec), omega_form_series(k, ell, prec)
    rep.add("omega generating series", a.agrees_with(b), f"{a} vs {b}", order=prec)
    a, b = big_omega_series(k, ell, prec), big_omega_form_series(k, ell, prec)
    rep.add("Omega generating series", a.agrees_with(b), f"{a} vs {b}", order=prec)
    for n in range(min(prec + w.m, 40)):
        E = expansion_coeffs("omega", k, n)
        rep.add(f"omega reconstruction n={n}", E.reconstruct() == E.target())
        E = expansion_coeffs("Omega", k, n)
        rep.add(f"Omega reconstruction n={n}", E.reconstruct() == E.target())
    return rep


def subdiagonal_omega14(n: int) -> Fraction:
    """Closed form of omega_{14,n}(n-2)."""
    return Fraction(48 * (n - 1) * (5 * n + 1), 2 * n - 1)


def subsubdiagonal_omega14(n: int) -> Fraction:
    """Closed form of omega_{14,n}(n-3)."""
    return Fraction(36 * (400 * n**4 - 2210 * n**3 + 14931 * n**2 - 29408 * n + 15832), (n - 1) * (2 * n - 3))


# ---------------------------------------------------------------- corollaries

def cor42_check(k: int, n: int) -> bool:
    """(n+1) F_{2,n} = sum_r F_{2-k,n-r} F_{k,r}."""
    rhs = Poly()
    for r in range(n + 1):
        rhs = rhs + faber_poly(2 - k, n - r).poly * faber_poly(k, r).poly
    return faber_poly(2, n).poly * (n + 1) == rhs


def oFOF_check(k: int, ell: int, n: int) -> bool:
    lhs, rhs = Poly(), Poly()
    for d in range(n + 1):
        lhs = lhs + faber_poly(2 - k, n - d).poly * omega(k, d, ell)
        rhs = rhs + faber_poly(k, d).poly * expansion_coeffs("Omega", k, n - d)[ell]
    return lhs == rhs


def ooOO_sides(k: int, ell: int, ell2: int, n: int) -> tuple[Fraction, Fraction]:
    lhs = sum((omega(k, d, ell) * omega(2 - k, n - d, ell2) for d in range(n + 1)), Fraction(0))
    rhs = sum((expansion_coeffs("Omega", k, n - d)[ell] * big_omega(k, d, ell2) for d in range(n + 1)), Fraction(0))
    return lhs, rhs


def ooOO_form_series(k: int, ell: int, ell2: int, prec: int) -> QSeries:
    """G_{12l+4d+6e} G_{12l'+14-4d-6e} / Delta^(l+l'+1), the shared generating series.

    The exponent is the product of the two omega generating series, whose
    Delta powers are -(l+m+1) and -(l'-m).
    """
    w = weight_decompose(k)
    pad = prec + abs(ell + ell2 + 1) + 2
    s = G(12 * ell + w.label, pad) * G(12 * ell2 + 14 - w.label, pad) * delta(pad + ell + ell2 + 1) ** (-(ell + ell2 + 1))
    return s.truncate(prec)


def ooOO_check(k: int, ell: int, ell2: int, n: int) -> Report:
    w, wd = weight_decompose(k), weight_decompose(2 - k)
    if not (valid_ell(w, ell) and valid_ell(wd, ell2)):
        raise InvalidParams("inadmissible l or l'")
    rep = Report("ooOO")
    ser = ooOO_form_series(k, ell, ell2, n + 2)
    for d in range(n + 1):
        lhs, rhs = ooOO_sides(k, ell, ell2, d)
        rep.add(f"n={d} convolutions", lhs == rhs, f"{lhs} vs {rhs}")
        rep.add(f"n={d} form coefficient", lhs == ser[d + 1], f"{lhs} vs {ser[d + 1]}")
    return rep


def _t_to_j_bi(P: int, Q: int) -> BiSeries:
    """1/(j(p) - j(q)) = sum_i t(p)^(i+1) j(q)^i."""
    t = t_series(P)
    acc = [QSeries.zero(Q) for _ in range(P)]
    tp = t
    for i in range(P - 1):
        jq = j_power(i, Q)
        for e in range(i + 1, P):
            c = tp[e]
            if c:
                acc[e] = acc[e] + jq * c
        tp = tp * t
    return BiSeries(acc, 0, P, "p", "q", Q)


def denominator_formula_check(P: int = 6, Q: int = 6) -> Report:
    rep = Report("denominator formula")
    lhs = _t_to_j_bi(P, Q)
    # Laurent rows lose inner precision under exp, so start with a margin
    pad = Q + 2 * P
    rows = [QSeries.zero(pad)] + [poly_in_j(faber_poly(0, n).poly, pad) / n for n in range(1, P)]
    ex = BiSeries(rows, 0, P, "p", "q", pad).exp()
    rhs = BiSeries([QSeries.zero(Q)] + [r.truncate(Q) for r in ex.rows[: P - 1]], 0, P, "p", "q", Q)
    rep.add(f"1/(j(p)-j(q)) = p exp(...) to ({P},{Q})", lhs.agrees_with(rhs), order=P)
    return rep


def corollary_checks(which: str, params: dict | None = None, prec: int = 6) -> Report:
    params = params or {}
    if which == "cor42":
        rep = Report("cor42")
        for k in params.get("k", range(-12, 28, 2)):
            for n in range(params.get("n_max", 4) + 1):
                rep.add(f"k={k} n={n}", cor42_check(k, n))
        return rep
    if which == "cor44_oFOF":
        rep = Report("oFOF")
        k = params.get("k", 14)
        w = weight_decompose(k)
        for ell in params.get("ell", [e for e in range(-w.m - 1, 3) if valid_ell(w, e)]):
            for n in range(params.get("n_max", 4) + 1):
                rep.add(f"k={k} l={ell} n={n}", oFOF_check(k, ell, n))
        return rep
    if which == "cor44_ooOO":
        return ooOO_check(params.get("k", 14), params.get("ell", 0), params.get("ell2", 1), params.get("n", prec))
    if which == "denominator_formula":
        return denominator_formula_check(prec, prec)
    raise InvalidParams(f"unknown corollary {which!r}")


# ------------------------------------------------------------ inverse series

def inverse_series(prec: int) -> tuple[QSeries, QSeries]:
    """(t(q), q(t)) with q(t) = t exp(G1(1728t)/F1(1728t))."""
    if prec < 2:
        raise InvalidParams("precision must be at least 2")
    t_of_q = t_series(prec)
    f1, g1 = _hyp_t(prec)
    q_of_t = exp(g1 / f1).shift(1).truncate(prec)
    return t_of_q, q_of_t


def inverse_series_check(prec: int) -> Report:
    rep = Report("inverse series")
    tq, qt = inverse_series(prec)
    rep.add("q(t) is the reversion of t(q)", qt.agrees_with(reversion(tq.with_var("t"))), order=prec)
    rep.add("q(t(q)) = q", compose(qt, tq).agrees_with(QSeries.monomial(1, prec)), order=prec)
    rep.add("t(q) integral", tq.is_integral())
    rep.add("q(t) integral", qt.is_integral())
    rep.add("t(q) j(q) = 1", (tq * j_invariant(prec)).agrees_with(QSeries.one(prec - 1)))
    return rep


# ------------------------------------------------------ coefficient formulas

def c1_formula(k: int, ell: int) -> Fraction:
    eps = weight_decompose(k).eps
    return Fraction(-744 * ell - 12 * (5 * k - 72 * eps))


def c2_formula(k: int, ell: int, lead: int = 276768) -> Fraction:
    """Second sub-leading coefficient of F_{k,l+m}; ``lead`` is the l^2 coefficient."""
    eps = weight_decompose(k).eps
    return Fraction(lead * ell**2 + 36 * (1240 * k - 17856 * eps - 13157) * ell
                    + 36 * (50 * k**2 - 5 * (288 * eps + 211) * k + 31104 * eps))


def faber_top_coeffs(k: int, ell: int) -> tuple[Fraction, Fraction]:
    """(c1, c2) read off F_{k,l+m}; needs l + m >= 2."""
    w = weight_decompose(k)
    n = ell + w.m
    if n < 2:
        raise InvalidParams("need degree at least 2")
    F = faber_poly(k, n, "hypergeometric").poly
    return F.coeffs[n - 1], F.coeffs[n - 2]


def coefficient_formula_check(pairs, lead: int = 276768) -> Report:
    rep = Report("c1/c2")
    for k, ell in pairs:
        c1, c2 = faber_top_coeffs(k, ell)
        rep.add(f"c1({k},{ell})", c1 == c1_formula(k, ell), f"{c1} vs {c1_formula(k, ell)}")
        rep.add(f"c2({k},{ell})", c2 == c2_formula(k, ell, lead), f"{c2} vs {c2_formula(k, ell, lead)}")
    return rep


COEFF_PAIRS = ((0, 2), (0, 5), (14, 2), (12, 3), (-12, 4), (26, 1), (2, 3), (8, 2), (22, 1), (6, 4))
