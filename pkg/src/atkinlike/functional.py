"""The moment functional L(j^n) = constant term of j^n E2 and what it controls.

Polynomials in j are paired by (f, g) = L(f(j) g(j)).  The Atkin polynomials
A_{n,2} are the monic orthogonal family of this pairing; the other Atkin-like
families are orthogonal for L twisted by j, j - 1728 or j(j - 1728).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction

from .atkin import adjoint_poly, atkin_poly, class_poly
from .errors import InconsistentRoutes, IndexOutOfRange, InsufficientPrecision, SingularHankel
from .extremal import G, _solve, normalizing_factor
from .hypergeom import hyp2f1
from .modforms import E2, E4, E6, delta, delta_product, hecke_weight_k, j_power, poly_in_j, recognize_poly_in_j, t_series
from .report import Report
from .series import Poly, QSeries, compose, reversion

_X = Poly.X()
_XM = Poly((-1728, 1))

# label -> (weight polynomial, sign of the norm, (delta, eps))
CLASS_DATA = {
    0: (_X * _XM, -1, (0, 0)),
    4: (_X * _XM, -1, (1, 0)),
    8: (_XM, -1, (2, 0)),
    6: (_X, 1, (0, 1)),
    10: (_X, 1, (1, 1)),
    14: (Poly((1,)), 1, (2, 1)),
}


# ------------------------------------------------------------------ moments

def _int_series_mul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for k in range(min(len(b), n - i)):
                out[i + k] += ai * b[k]
    return out


class _MomentCache:
    """Append-only list of L(j^n); recomputation must reproduce old entries."""

    def __init__(self):
        self._values: list[int] = []
        self._lock = threading.Lock()

    def get(self, count: int) -> list[int]:
        with self._lock:
            if count > len(self._values):
                fresh = self._compute(max(count, 2 * len(self._values)))
                for i, v in enumerate(self._values):
                    if fresh[i] != v:
                        raise InconsistentRoutes(f"moment cache mismatch at n={i}")
                self._values = fresh
            return self._values[:count]

    @staticmethod
    def _compute(count: int) -> list[int]:
        # q j = q E4^3 / Delta with Delta from the product formula
        n = count + 1
        d = delta_product(n + 1).shift(-1)
        u = (E4(n) ** 3 / d).truncate(n)
        ui = [int(c) for c in u.coeffs]
        e2 = [int(c) for c in E2(n).coeffs]
        out = []
        power = [1] + [0] * (n - 1)
        for k in range(count):
            out.append(sum(power[i] * e2[k - i] for i in range(k + 1)))
            power = _int_series_mul(power, ui, n)
        return out


_CACHE = _MomentCache()


@dataclass(frozen=True)
class MomentSequence:
    moments: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.moments[n]

    def __len__(self) -> int:
        return len(self.moments)

    def hankel_determinant(self, order: int) -> int:
        if 2 * order - 1 > len(self.moments):
            raise InsufficientPrecision("not enough moments for this Hankel order")
        M = [[self.moments[i + k] for k in range(order)] for i in range(order)]
        return bareiss_det(M)

    def is_positive_definite(self, order: int) -> bool:
        return all(self.hankel_determinant(k) > 0 for k in range(1, order + 1))


def bareiss_det(M: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    A = [list(r) for r in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for jj in range(k + 1, n):
                A[i][jj] = (A[i][jj] * A[k][k] - A[i][k] * A[k][jj]) // prev
        prev = A[k][k]
    return sign * A[-1][-1] if n else 1


def moments(count: int) -> MomentSequence:
    return MomentSequence(tuple(_CACHE.get(count)))


def moment(n: int, prec_budget: int | None = None) -> int:
    """L(j^n); prec_budget (if given) must cover n + 2 q-coefficients."""
    if prec_budget is not None and prec_budget < n + 2:
        raise InsufficientPrecision(f"moment {n} needs a budget of {n + 2} terms")
    return _CACHE.get(n + 1)[n]


def apply_functional(P: Poly) -> Fraction:
    if not P:
        return Fraction(0)
    ms = _CACHE.get(P.degree + 1)
    return sum((c * ms[i] for i, c in enumerate(P.coeffs)), Fraction(0))


def residue_functional(P: Poly) -> Fraction:
    """Constant term of P(j) E2, computed straight from q-expansions."""
    if not P:
        return Fraction(0)
    s = poly_in_j(P, 1) * E2(P.degree + 1)
    return s[0]


def inner_product(f: Poly, g: Poly, check: bool = True) -> Fraction:
    """(f, g) = L(f(j) g(j)); with ``check`` the residue route must agree."""
    h = f * g
    val = apply_functional(h)
    if check:
        other = residue_functional(h)
        if other != val:
            raise InconsistentRoutes(f"inner product routes disagree: {val} vs {other}")
    return val


# ---------------------------------------------------- generating functions

def moment_series(W: Poly, prec: int) -> QSeries:
    """sum_n L(j^n W(j)) t^(n+1) as a series in t."""
    coeffs = [Fraction(0)] + [apply_functional(_X**n * W) for n in range(prec - 1)]
    return QSeries(coeffs, 0, prec, "t")


def _t_hyp(a, b, c, prec: int) -> QSeries:
    return hyp2f1(a, b, c, prec, "t").scale_var(1728)


def stieltjes_series(prec: int, route: str = "moments") -> QSeries:
    """L(1/(j(p) - j)) as a q-series (q standing for p)."""
    t = t_series(prec)
    if route == "moments":
        return compose(moment_series(Poly((1,)), prec), t)
    if route == "eisenstein":
        return E2(prec) * delta(prec) / (E4(prec) ** 2 * E6(prec))
    if route == "hypergeometric":
        ratio = _t_hyp(Fraction(5, 12), Fraction(13, 12), 1, prec) / _t_hyp(Fraction(1, 12), Fraction(5, 12), 1, prec)
        return compose(ratio.shift(1).truncate(prec), t)
    raise ValueError(f"unknown route {route!r}")


def stieltjes_check(prec: int) -> Report:
    rep = Report("stieltjes")
    ref = stieltjes_series(prec, "moments")
    for route in ("eisenstein", "hypergeometric"):
        rep.add(f"moments = {route}", ref.agrees_with(stieltjes_series(prec, route)), order=prec)
    expected = {1: 1, 2: -24, 3: 196812, 4: 38262208}
    rep.add("leading coefficients", all(ref[e] == v for e, v in expected.items() if e < prec))
    return rep


def lstar_series(prec: int, route: str = "extremal") -> QSeries:
    """sum_n L*(j^n) t^(n+1) as a series in t."""
    if route == "extremal":
        tq = t_series(prec + 2)
        qt = reversion(tq.with_var("t"))
        f = G(14, prec + 2) / (E2(prec + 2) * delta(prec + 2))
        return compose(f.with_var("t"), qt).truncate(prec)
    if route == "hypergeometric":
        num = _t_hyp(Fraction(11, 12), Fraction(19, 12), 3, prec)
        den = _t_hyp(Fraction(-1, 12), Fraction(7, 12), 1, prec)
        return (num / den).shift(1).truncate(prec)
    if route == "definition":
        s = moment_series(Poly((1,)), prec + 2)
        a12 = atkin_poly(2, 1)
        inv_t = QSeries.monomial(-1, prec, 1, "t")
        a12_at = inv_t * a12[1] + a12[0]
        return ((s.inverse() - a12_at) / (-normalizing_factor(1, 2))).truncate(prec)
    raise ValueError(f"unknown route {route!r}")


def lstar_moment(n: int, prec_budget: int | None = None) -> Fraction:
    budget = n + 2 if prec_budget is None else prec_budget
    if budget < n + 2:
        raise InsufficientPrecision("budget too small")
    return lstar_series(budget, "extremal")[n + 1]


def lstar_functional(P: Poly) -> Fraction:
    if not P:
        return Fraction(0)
    s = lstar_series(P.degree + 2, "extremal")
    return sum((c * s[i + 1] for i, c in enumerate(P.coeffs)), Fraction(0))


def lstar_check(count: int) -> Report:
    rep = Report("L*")
    prec = count + 1
    ref = lstar_series(prec, "extremal")
    for route in ("hypergeometric", "definition"):
        rep.add(f"extremal = {route}", ref.agrees_with(lstar_series(prec, route)), order=prec)
    expected = (1, 920, 1024050, 1261043280, 1653817332720)
    rep.add("first moments", all(ref[i + 1] == v for i, v in enumerate(expected) if i + 1 < prec))
    m = min(4, (count - 1) // 2)
    for a in range(m + 1):
        for b in range(a + 1, m + 1):
            val = lstar_functional(adjoint_poly(2, a + 1) * adjoint_poly(2, b + 1))
            rep.add(f"L*(B_{a + 1},2 B_{b + 1},2) = 0", val == 0)
    return rep


# ---------------------------------------------------------- image formulas

def _difference_image(W: Poly) -> Poly:
    """L applied in j to (W(X) - W(j)) / (X - j)."""
    deg = W.degree
    if deg < 1:
        return Poly()
    ms = _CACHE.get(deg)
    out = []
    for a in range(deg):
        out.append(sum((W.coeffs[i] * ms[i - 1 - a] for i in range(a + 1, deg + 1)), Fraction(0)))
    return Poly(out)


def _image_data(r: int, m: int):
    """(W, B, sign * N, hypergeometric parameters) for the four families."""
    F = Fraction
    if r == 0:
        return (_X * _XM * atkin_poly(0, m + 1), adjoint_poly(0, m + 1), -normalizing_factor(m + 1, 0),
                (m + F(13, 12), m + F(17, 12), 2 * m + 3))
    if r == 2:
        return atkin_poly(2, m), adjoint_poly(2, m), normalizing_factor(m, 2), (m + F(5, 12), m + F(13, 12), 2 * m + 1)
    if r == 6:
        return (_X * atkin_poly(6, m), adjoint_poly(6, m), normalizing_factor(m, 6),
                (m + F(13, 12), m + F(17, 12), 2 * m + 2))
    return (_XM * atkin_poly(8, m), adjoint_poly(8, m), -normalizing_factor(m, 8),
            (m + F(5, 12), m + F(13, 12), 2 * m + 2))


def extremal_as_image(label: int, m: int, prec: int) -> QSeries:
    """E4^delta E6^eps Delta^m L(w A_{m,label}(j) / (j(p) - j)) / ((-1)^(1-eps) N)."""
    wpoly, sign, (d, e) = CLASS_DATA[label]
    A = class_poly(label, m)
    extra = prec + 4 + abs(m)
    gen = compose(moment_series(wpoly * A, extra), t_series(extra))
    pref = E4(extra) ** d * E6(extra) ** e * delta(extra) ** m
    return (pref * gen / (sign * normalizing_factor(m, label))).truncate(prec)


def image_formulas_check(m_max: int, prec: int) -> Report:
    rep = Report("image formulas")
    for r in (0, 2, 6, 8):
        for m in range(m_max + 1):
            W, B, sN, (a, b, c) = _image_data(r, m)
            rep.add(f"difference quotient r={r} m={m}", _difference_image(W) == B)
            lhs = moment_series(W, prec)
            rhs = (_t_hyp(a, b, c, prec) / _t_hyp(Fraction(1, 12), Fraction(5, 12), 1, prec)).shift(m + 1) * sN
            rep.add(f"ratio r={r} m={m}", lhs.agrees_with(rhs), order=prec)
    for label in (0, 4, 6, 8, 10, 14):
        d, e = CLASS_DATA[label][2]
        lo = {0: 1, 4: 1, 14: -1}.get(label, 0)
        for m in range(lo, m_max + 1):
            w = 12 * m + 4 * d + 6 * e
            got = extremal_as_image(label, m, prec)
            rep.add(f"G_{w} as image", got.agrees_with(G(w, prec)), order=prec)
    return rep


# ------------------------------------------------ families from moments alone

def orthogonal_poly(W: Poly, n: int) -> Poly:
    """Monic P of degree n with L(W P X^i) = 0 for i < n."""
    if n == 0:
        return Poly((1,))
    ms = _CACHE.get(W.degree + 2 * n + 1)

    def wl(e: int) -> Fraction:
        return sum((c * ms[i + e] for i, c in enumerate(W.coeffs)), Fraction(0))

    rows = [[wl(i + k) for i in range(n)] for k in range(n)]
    sol = _solve(rows, [-wl(n + k) for k in range(n)])
    if sol is None:
        raise SingularHankel(f"weighted Hankel matrix of order {n} is singular")
    return Poly(sol + [Fraction(1)])


# r -> (weight, degree of A_{n,r} as a function of n)
_FAMILY_WEIGHTS = {2: (Poly((1,)), 0), 6: (_X, 0), 8: (_XM, 0), 0: (_X * _XM, -1)}


def atkin_poly_from_moments(r: int, n: int) -> Poly:
    """A_{n,r} as the monic orthogonal polynomial of the twisted functional."""
    W, shift = _FAMILY_WEIGHTS[r]
    if n + shift < 0:
        return Poly()
    return orthogonal_poly(W, n + shift)


def adjoint_poly_from_moments(r: int, n: int) -> Poly:
    """B_{n,r} as L applied to the difference quotient of W A_{n,r} (n >= 1 when r = 0)."""
    if r == 0 and n == 0:
        raise IndexOutOfRange("B_{0,0} is a seed value, not a difference quotient")
    W, _ = _FAMILY_WEIGHTS[r]
    return _difference_image(W * atkin_poly_from_moments(r, n))


# ----------------------------------------------------------- orthogonality

ORTHO_CLASSES = {
    0: (lambda m: atkin_poly(0, m + 1), _X * _XM, lambda m: -normalizing_factor(m + 1, 0)),
    2: (lambda m: atkin_poly(2, m), Poly((1,)), lambda m: normalizing_factor(m, 2)),
    6: (lambda m: atkin_poly(6, m), _X, lambda m: normalizing_factor(m, 6)),
    8: (lambda m: atkin_poly(8, m), _XM, lambda m: -normalizing_factor(m, 8)),
}


def orthogonality_suite(n_max: int, check_residue: bool = False) -> Report:
    rep = Report("orthogonality")
    for r, (fam, wpoly, norm) in ORTHO_CLASSES.items():
        for m in range(n_max + 1):
            for n in range(m, n_max + 1):
                val = inner_product(wpoly * fam(m), fam(n), check=check_residue)
                want = norm(m) if m == n else 0
                rep.add(f"r={r} ({m},{n})", val == want, f"{val} vs {want}")
    for n in range(1, n_max + 1):
        rep.add(f"L(A_{n},2) = 0", apply_functional(atkin_poly(2, n)) == 0)
        rep.add(f"L(j A_{n},6) = 0", apply_functional(_X * atkin_poly(6, n)) == 0)
        rep.add(f"L((j-1728) A_{n},8) = 0", apply_functional(_XM * atkin_poly(8, n)) == 0)
        rep.add(f"L(j(j-1728) A_{n + 1},0) = 0", apply_functional(_X * _XM * atkin_poly(0, n + 1)) == 0)
    return rep


def hankel_check(order: int) -> Report:
    rep = Report("hankel")
    ms = moments(2 * order + 1)
    for k in range(1, order + 1):
        det = ms.hankel_determinant(k)
        rep.add(f"order {k}", det > 0, str(det))
    return rep


# -------------------------------------------------------------------- Hecke

def hecke_on_poly(P: Poly, n: int, margin: int = 3) -> Poly:
    """P(j) |_0 T_n, recognised again as a polynomial in j."""
    prec = n * (margin + 1) + 1
    return recognize_poly_in_j(hecke_weight_k(poly_in_j(P, prec), n, 0))


def hecke_self_adjoint_check(n_max: int = 6) -> Report:
    rep = Report("hecke self-adjoint")
    polys = {"1": Poly((1,)), "j": _X, "j^2": _X * _X, "A_1,2": atkin_poly(2, 1)}
    for n in range(1, n_max + 1):
        images = {k: hecke_on_poly(P, n) for k, P in polys.items()}
        names = list(polys)
        for i, a in enumerate(names):
            for b in names[i:]:
                lhs = inner_product(images[a], polys[b], check=False)
                rhs = inner_product(polys[a], images[b], check=False)
                rep.add(f"T_{n} ({a}, {b})", lhs == rhs)
    return rep
