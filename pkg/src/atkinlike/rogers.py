"""Continued fractions of the moment series h(x) = sum L(j^n) x^n and Rogers' addition formula."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .atkin import atkin_poly, recursion_a
from .errors import InconsistentRoutes, InvalidParams, QDBreakdown, SingularHankel
from .extremal import G, normalizing_factor
from .functional import moments as atkin_moments
from .hypergeom import hyp2f1
from .modforms import E4, E6, delta, t_series
from .report import Report
from .series import BiSeries, Poly, QSeries, borel, compose, laplace

# --------------------------------------------------------------- J-fraction


def jfraction_from_moments(moments, depth: int, allow_terminate: bool = False) -> tuple[list[Fraction], list[Fraction]]:
    """alpha_1..alpha_depth and beta_1..beta_depth by the Stieltjes procedure.

    With ``allow_terminate`` a vanishing norm ends the fraction (remaining
    alphas and betas are 0) instead of raising SingularHankel.
    """
    ms = [Fraction(m) for m in moments]
    if len(ms) < 2 * depth + 1:
        raise InvalidParams(f"depth {depth} needs {2 * depth + 1} moments")

    def L(P: Poly) -> Fraction:
        return sum((c * ms[i] for i, c in enumerate(P.coeffs)), Fraction(0))

    X = Poly.X()
    prev, cur = Poly(), Poly((1,))
    norm = L(cur)
    if norm == 0:
        raise SingularHankel("L(1) = 0")
    alpha, beta = [], []
    for n in range(depth):
        a = L(X * cur * cur) / norm
        alpha.append(a)
        nxt = (X - a) * cur - (prev * beta[-1] if beta else Poly())
        nnorm = L(nxt * nxt) if 2 * nxt.degree < len(ms) else None
        if nnorm is None:
            break
        if nnorm == 0:
            if not allow_terminate:
                raise SingularHankel(f"Hankel minor of order {n + 2} vanishes")
            beta.append(Fraction(0))
            alpha.extend([Fraction(0)] * (depth - len(alpha)))
            beta.extend([Fraction(0)] * (depth - len(beta)))
            return alpha, beta
        beta.append(nnorm / norm)
        prev, cur, norm = cur, nxt, nnorm
    return alpha, beta


# --------------------------------------------------------------- S-fraction

def sfraction_from_series(h: QSeries, depth: int) -> list[Fraction]:
    """e_1..e_depth of h = a0/(1 - e1 x/(1 - e2 x/(1 - ...))) by the qd algorithm."""
    c = [h[i] for i in range(h.prec)]
    if not c or c[0] == 0:
        raise QDBreakdown("h(0) must be nonzero")
    if len(c) < depth + 1:
        raise InvalidParams(f"depth {depth} needs {depth + 1} coefficients")
    n_rows = len(c)
    e_prev = {n: Fraction(0) for n in range(n_rows)}
    q = {}
    for n in range(n_rows - 1):
        if c[n] == 0:
            raise QDBreakdown(f"zero pivot at c_{n}")
        q[n] = c[n + 1] / c[n]
    out = []
    k = 1
    while True:
        out.append(q[0])
        if len(out) == depth:
            break
        e_new = {}
        for n in range(len(q) - 1):
            e_new[n] = e_prev[n + 1] + q[n + 1] - q[n]
        out.append(e_new[0])
        if len(out) == depth:
            break
        q_new = {}
        for n in range(len(e_new) - 1):
            if e_new[n] == 0:
                raise QDBreakdown(f"zero pivot e^({n})_{k}")
            q_new[n] = q[n + 1] * e_new[n + 1] / e_new[n]
        q, e_prev = q_new, e_new
        k += 1
    return out


# --------------------------------------------------------------- closed forms

def e_closed(n: int) -> Fraction:
    if n == 1:
        return Fraction(720)
    s = (-1) ** n
    return 12 * (6 + Fraction(s, n - 1)) * (6 + Fraction(s, n))


def alpha_closed(n: int) -> Fraction:
    if n == 1:
        return Fraction(720)
    return Fraction(24 * (144 * (n - 1) ** 2 - 29), (2 * n - 1) * (2 * n - 3))


def beta_closed(n: int) -> Fraction:
    if n == 1:
        return Fraction(393120)
    return Fraction(36 * (12 * n - 13) * (12 * n - 7) * (12 * n - 5) * (12 * n + 1), n * (n - 1) * (2 * n - 1) ** 2)


@dataclass(frozen=True)
class CFCoeffs:
    e: tuple
    alpha: tuple
    beta: tuple
    A: tuple

    def consistent(self) -> bool:
        """alpha_1 = e_1, alpha_n = e_{2n-2} + e_{2n-1}, beta_n = e_{2n-1} e_{2n}."""
        e = (None,) + tuple(self.e)
        for n in range(1, len(self.alpha) + 1):
            if 2 * n >= len(e):
                break
            want = e[1] if n == 1 else e[2 * n - 2] + e[2 * n - 1]
            if self.alpha[n - 1] != want or self.beta[n - 1] != e[2 * n - 1] * e[2 * n]:
                return False
        return True


def moment_series(count: int) -> QSeries:
    return QSeries(list(atkin_moments(count).moments), 0, count, "x")


def atkin_cf(depth: int) -> CFCoeffs:
    ms = atkin_moments(2 * depth + 1).moments
    alpha, beta = jfraction_from_moments(ms, depth)
    e = sfraction_from_series(moment_series(2 * depth + 1), 2 * depth)
    A = [Fraction(1, ms[0])]
    for b in beta:
        A.append(A[-1] * b)
    return CFCoeffs(tuple(e), tuple(alpha), tuple(beta), tuple(A))


# --------------------------------------------------------------- phi series

def phi_recurrence(h: QSeries, alpha, beta, r: int) -> QSeries:
    """phi_r from phi_0 = h and (1 - alpha_n x) phi_{n-1} = phi_{n-2} + beta_n x^2 phi_n."""
    x = QSeries.monomial(1, h.prec, 1, h.var)
    one = QSeries.one(h.prec, h.var)
    prev2, prev = None, h
    if r == 0:
        return h
    for n in range(1, r + 1):
        left = (one - x * alpha[n - 1]) * prev
        rest = left - (QSeries.one(h.prec, h.var) * h[0] if n == 1 else prev2)
        if beta[n - 1] == 0:
            raise SingularHankel(f"beta_{n} = 0")
        nxt = (rest / beta[n - 1]).shift(-2)
        prev2, prev = prev, nxt
    return prev


def phi_hypergeometric(r: int, prec: int, var: str = "x") -> QSeries:
    num = hyp2f1(r + Fraction(5, 12), r + Fraction(13, 12), 2 * r + 1, prec, var).scale_var(1728)
    den = hyp2f1(Fraction(1, 12), Fraction(5, 12), 1, prec, var).scale_var(1728)
    return num / den


def phi_series(r: int, prec: int) -> QSeries:
    """phi_r to O(x^prec); recurrence and hypergeometric routes must agree."""
    if r < 0:
        raise InvalidParams("r must be non-negative")
    count = prec + 2 * r
    h = moment_series(count)
    ms = atkin_moments(2 * r + 3).moments
    alpha, beta = jfraction_from_moments(ms, r + 1)
    rec = phi_recurrence(h, alpha, beta, r).truncate(prec)
    hyp = phi_hypergeometric(r, prec)
    if not rec.agrees_with(hyp):
        raise InconsistentRoutes(f"phi_{r}: recurrence and 2F1 ratio disagree")
    return rec


# --------------------------------------------------------------- addition formula

def _borel_bi(h: QSeries, P: int) -> BiSeries:
    """B(h)(x + y) = sum a_{i+k} x^i y^k / (i! k!)."""
    rows = [QSeries([h[i + k] / (factorial(i) * factorial(k)) for k in range(P)], 0, P, "y") for i in range(P)]
    return BiSeries(rows, 0, P, "x", "y", P)


def addition_formula_sides(h: QSeries, alpha, beta, P: int) -> tuple[BiSeries, BiSeries, list[Fraction]]:
    """Both sides of B(h)(x+y) = A0 B(h)(x) B(h)(y) + sum A_r h_r(x) h_r(y) to order P."""
    lhs = _borel_bi(h, P)
    A = [1 / h[0]]
    for b in beta:
        A.append(A[-1] * b)
    Bh = borel(h.truncate(P))
    rhs = BiSeries.outer_product(Bh, Bh.with_var("y")) * A[0]
    for r in range(1, P):
        if r >= len(A) or A[r] == 0:
            break
        phi = phi_recurrence(h, alpha, beta, r).truncate(P)
        hr = borel(phi.shift(r).truncate(P))
        rhs = rhs + BiSeries.outer_product(hr, hr.with_var("y")) * A[r]
    return lhs, rhs, A


def cosine_toy(order: int = 8) -> Report:
    rep = Report("cosine")
    moments = [(-1) ** (n // 2) if n % 2 == 0 else 0 for n in range(2 * order + 2)]
    h = QSeries(moments[: 2 * order], 0, 2 * order, "x")
    alpha, beta = jfraction_from_moments(moments, order, allow_terminate=True)
    rep.add("alpha = 0", all(a == 0 for a in alpha))
    rep.add("beta_1 = -1, beta_n = 0", beta[0] == -1 and all(b == 0 for b in beta[1:]))
    phi1 = phi_recurrence(h, alpha, beta, 1).truncate(order)
    rep.add("phi_1 = h", phi1.agrees_with(h.truncate(order)))
    lhs, rhs, A = addition_formula_sides(h, alpha, beta, order)
    rep.add("A = (1, -1, 0, ...)", A[:3] == [1, -1, 0])
    rep.add(f"cos(x+y) = cos x cos y - sin x sin y to order {order}", lhs.agrees_with(rhs), order=order)
    return rep


def addition_formula_check(P: int = 5) -> Report:
    rep = Report("addition formula")
    depth = P + 1
    cf = atkin_cf(depth)
    rep.add("S/J consistency", cf.consistent())
    rep.add("A_r = N_{r,2}, r <= 4", all(cf.A[r] == normalizing_factor(r, 2) for r in range(min(5, len(cf.A)))))
    h = moment_series(P + 2 * P + 2)
    lhs, rhs, _ = addition_formula_sides(h, cf.alpha, cf.beta, P)
    rep.add(f"Atkin case at bi-order ({P},{P})", lhs.agrees_with(rhs), order=P)
    # s L(B(h))(s) = h(1/s)
    hb = h.truncate(P)
    rep.add("Laplace of Borel round trip", laplace(borel(hb)).shift(-1).agrees_with(hb.with_var("s_inv")))
    rep.extend(addphi_check(P))
    return rep


def addphi_check(P: int) -> Report:
    """The Laplace-specialised addition formula and its modular-form reading."""
    rep = Report("addphi")
    ms = atkin_moments(2 * P + 2).moments
    # left: sum_n L(j^n) sum_k tp^(n-k) tq^k; right: sum_r N_{r,2} tp^r phi_r(tp) tq^r phi_r(tq)
    lhs = BiSeries([QSeries([Fraction(ms[i + k]) for k in range(P)], 0, P, "y") for i in range(P)], 0, P, "x", "y", P)
    rhs = None
    series_in_p = []
    pad = P + 2
    for r in range(P):
        phr = phi_series(r, P).shift(r).truncate(P)
        term = BiSeries.outer_product(phr, phr.with_var("y")) * normalizing_factor(r, 2)
        rhs = term if rhs is None else rhs + term
        tp = t_series(pad)
        composed = compose(phi_series(r, pad).shift(r).truncate(pad), tp)
        form = E4(pad) * G(12 * r + 2, pad + r) * delta(pad + r) ** (-r) / E6(pad)
        series_in_p.append(composed)
        rep.add(f"t^{r} phi_{r}(t) = E4 G_{12 * r + 2} / (E6 Delta^{r})", composed.agrees_with(form), order=pad)
    rep.add(f"Laplace-specialised identity to ({P},{P})", lhs.agrees_with(rhs), order=P)
    # E6/E4 * t^r phi_r(t) summed with N_{r,2} reproduces the closed form of the F_0 Gram series
    from .gram import _bi_sum_of_products, thm53_rhs

    ratio = E6(pad) / E4(pad)
    terms = [(normalizing_factor(r, 2), ratio * s, ratio * s) for r, s in enumerate(series_in_p)]
    via_rogers = _bi_sum_of_products(terms, P, P)
    rep.add(f"Rogers route = closed form at ({P},{P})", via_rogers.agrees_with(thm53_rhs(P, P)), order=P)
    return rep


def cf_check(depth: int = 6) -> Report:
    rep = Report("continued fractions")
    cf = atkin_cf(depth)
    rep.add("e closed form", all(cf.e[n - 1] == e_closed(n) for n in range(1, len(cf.e) + 1)))
    rep.add("alpha closed form", all(cf.alpha[n - 1] == alpha_closed(n) for n in range(1, depth + 1)))
    rep.add("beta closed form", all(cf.beta[n - 1] == beta_closed(n) for n in range(1, depth + 1)))
    rep.add("S/J consistency", cf.consistent())
    rep.add("A_r = N_{r,2}", all(cf.A[r] == normalizing_factor(r, 2) for r in range(depth + 1)))
    rep.add("alpha_{n+1} = a_{n,2}", all(cf.alpha[n] == recursion_a(2, n) for n in range(1, depth)))
    X = Poly.X()
    P_prev, P_cur = Poly(), Poly((1,))
    ok = True
    for n in range(depth):
        nxt = (X - cf.alpha[n]) * P_cur - (P_prev * cf.beta[n - 1] if n else Poly())
        ok &= nxt == atkin_poly(2, n + 1)
        P_prev, P_cur = P_cur, nxt
    rep.add("three-term polynomials = A_{n,2}", ok)
    for r in range(5):
        try:
            phi_series(r, 12)
            rep.add(f"phi_{r} routes", True, order=12)
        except InconsistentRoutes as exc:
            rep.add(f"phi_{r} routes", False, str(exc), order=12)
    return rep
