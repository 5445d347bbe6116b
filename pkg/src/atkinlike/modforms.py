"""q-expansions of Eisenstein series, the discriminant and j, plus the
derivations and Hecke operators acting on them.

All constructors take the absolute precision ``prec`` of the returned series
and are memoised, so repeated requests are cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InsufficientPrecision, InvalidWeight, NotPolynomialInJ
from .series import Poly, QSeries, to_rat

# E_k = 1 + c_k * sum sigma_{k-1}(n) q^n with c_k = -2k/B_k
_EISENSTEIN_CONST = {2: -24, 4: 240, 6: -504, 8: 480, 10: -264, 14: -24}


def sigma(n: int, r: int) -> int:
    """Sum of the r-th powers of the positive divisors of n."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**r
            e = n // d
            if e != d:
                total += e**r
        d += 1
    return total


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class FormExpansion:
    """A q-series tagged with its weight and depth."""

    series: QSeries
    weight: int
    depth: int = 0

    def _lift(self, other):
        return other.series if isinstance(other, FormExpansion) else other

    def __add__(self, other):
        if isinstance(other, FormExpansion) and other.weight != self.weight:
            raise InvalidWeight(f"cannot add weights {self.weight} and {other.weight}")
        d = max(self.depth, other.depth) if isinstance(other, FormExpansion) else self.depth
        return FormExpansion(self.series + self._lift(other), self.weight, d)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FormExpansion(-self.series, self.weight, self.depth)

    def __mul__(self, other):
        if isinstance(other, FormExpansion):
            return FormExpansion(self.series * other.series, self.weight + other.weight, self.depth + other.depth)
        return FormExpansion(self.series * to_rat(other), self.weight, self.depth)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, FormExpansion):
            return FormExpansion(self.series / other.series, self.weight - other.weight, self.depth)
        return FormExpansion(self.series / to_rat(other), self.weight, self.depth)

    def __pow__(self, n: int):
        return FormExpansion(self.series**n, self.weight * n, self.depth * max(n, 0))

    def __getitem__(self, e: int) -> Fraction:
        return self.series[e]


def _as_series(f) -> QSeries:
    return f.series if isinstance(f, FormExpansion) else f


@lru_cache(maxsize=None)
def _eisenstein_series(k: int, prec: int) -> QSeries:
    c = _EISENSTEIN_CONST[k]
    return QSeries([1] + [c * sigma(n, k - 1) for n in range(1, prec)], 0, prec)


def eisenstein(k: int, prec: int) -> FormExpansion:
    """E_k for k in {2, 4, 6, 8, 10, 14}, to O(q^prec)."""
    if k not in _EISENSTEIN_CONST:
        raise InvalidWeight(f"no Eisenstein series of weight {k} here")
    if prec < 1:
        raise InsufficientPrecision("precision must be at least 1")
    return FormExpansion(_eisenstein_series(k, prec), k, 1 if k == 2 else 0)


def E2(prec: int) -> QSeries:
    return _eisenstein_series(2, prec)


def E4(prec: int) -> QSeries:
    return _eisenstein_series(4, prec)


def E6(prec: int) -> QSeries:
    return _eisenstein_series(6, prec)


@lru_cache(maxsize=None)
def delta(prec: int) -> QSeries:
    """The discriminant (E4^3 - E6^2)/1728."""
    return (E4(prec) ** 3 - E6(prec) ** 2) / 1728


@lru_cache(maxsize=None)
def delta_product(prec: int) -> QSeries:
    """q * prod (1 - q^n)^24, built from Euler's pentagonal series."""
    n = max(prec - 1, 1)
    eta = [0] * n
    k = 0
    while True:
        hit = False
        for m in (k * (3 * k - 1) // 2, k * (3 * k + 1) // 2):
            if m < n:
                eta[m] = (-1) ** k
                hit = True
        if not hit:
            break
        k += 1
    return (QSeries(eta, 0, n) ** 24).shift(1).truncate(prec)


@lru_cache(maxsize=None)
def _j_unit(rel: int) -> QSeries:
    """q*j = E4^3 / (Delta/q) to relative precision ``rel``."""
    d = delta(rel + 1).shift(-1)
    return (E4(rel) ** 3 / d).truncate(rel)


def j_invariant(prec: int) -> QSeries:
    """j = q^-1 + 744 + 196884 q + ... to O(q^prec)."""
    return _j_unit(prec + 1).shift(-1)


@lru_cache(maxsize=None)
def j_power(n: int, prec: int) -> QSeries:
    """j^n to O(q^prec); n may be negative."""
    rel = prec + n
    if rel < 1:
        return QSeries.zero(prec)
    return (_j_unit(rel) ** n).shift(-n)


@lru_cache(maxsize=None)
def t_series(prec: int, var: str = "q") -> QSeries:
    """t = 1/j = Delta / E4^3 as a power series."""
    return (delta(prec) / E4(prec) ** 3).with_var(var)


def delta_and_j(prec: int) -> tuple[QSeries, QSeries]:
    return delta(prec), j_invariant(prec)


# -------------------------------------------------------------- derivations

def d_operator(f):
    """q d/dq; keeps the FormExpansion tag and raises weight by 2."""
    if isinstance(f, FormExpansion):
        return FormExpansion(f.series.theta(), f.weight + 2, f.depth + 1)
    return f.theta()


def _e2_like(s: QSeries) -> QSeries:
    tv = s.true_valuation()
    need = s.prec - (tv if tv is not None else s.val)
    return E2(max(need, 1))


def serre_derivative(f, k, iterate: int = 1):
    """The iterated Serre derivative d_k^n with d_k = D - (k/12) E2.

    The iteration is d_{k+2(n-1)} o ... o d_{k+2} o d_k.
    """
    k = to_rat(k)
    tagged = isinstance(f, FormExpansion)
    s = _as_series(f)
    for i in range(iterate):
        kk = k + 2 * i
        s = s.theta() - _e2_like(s) * s * (kk / 12)
    if tagged:
        stable = k == f.weight - f.depth
        return FormExpansion(s, f.weight + 2 * iterate, f.depth if stable else f.depth + 1)
    return s


# -------------------------------------------------------------------- Hecke

def hecke_weight_k(f, n: int, k: int) -> QSeries:
    """f |_k T_n, coefficient m being sum_{d | (m, n)} d^(k-1) c(mn/d^2)."""
    s = _as_series(f)
    if n < 1:
        raise ValueError("Hecke index must be positive")
    tv = s.true_valuation()
    v = s.val if tv is None else tv
    out_val = v * n if v <= 0 else -(-v // n)
    out_prec = (s.prec - 1) // n + 1
    if out_prec <= out_val:
        raise InsufficientPrecision(f"input precision {s.prec} too small for T_{n}")
    coeffs = []
    for m in range(out_val, out_prec):
        g = gcd(m, n)
        acc = Fraction(0)
        for d in divisors(g):
            idx = m * n // (d * d)
            if idx >= v:
                acc += Fraction(d) ** (k - 1) * s[idx]
        coeffs.append(acc)
    return QSeries(coeffs, out_val, out_prec, s.var)


def recognize_poly_in_j(f) -> Poly:
    """Write a weight-0 q-series as P(j); the residual at q^1 .. q^(prec-1) must vanish."""
    s = _as_series(f)
    if s.prec < 2:
        raise InsufficientPrecision("need at least the q^1 coefficient to recognise")
    tv = s.true_valuation()
    n = 0 if tv is None or tv >= 0 else -tv
    r = s
    coeffs = [Fraction(0)] * (n + 1)
    for e in range(-n, 1):
        c = r[e]
        if c:
            coeffs[-e] = c
            r = r - j_power(-e, s.prec) * c
    for e in range(1, s.prec):
        if r[e]:
            raise NotPolynomialInJ(f"residual coefficient at q^{e} is {r[e]}")
    return Poly(coeffs)


def poly_in_j(P: Poly, prec: int) -> QSeries:
    """P(j) to O(q^prec), each power of j computed to full precision."""
    out = QSeries.zero(prec)
    for i, c in enumerate(P.coeffs):
        if c:
            out = out + j_power(i, prec) * c
    return out


# ----------------------------------------------------------- property checks

def ramanujan_check(prec: int):
    """D E2 = (E2^2 - E4)/12, D E4 = (E2 E4 - E6)/3, D E6 = (E2 E6 - E4^2)/2."""
    from .report import Report

    rep = Report("ramanujan")
    e2, e4, e6 = E2(prec), E4(prec), E6(prec)
    rep.add("D E2", e2.theta().agrees_with((e2 * e2 - e4) / 12), order=prec)
    rep.add("D E4", e4.theta().agrees_with((e2 * e4 - e6) / 3), order=prec)
    rep.add("D E6", e6.theta().agrees_with((e2 * e6 - e4 * e4) / 2), order=prec)
    rep.add("D Delta = E2 Delta", delta(prec).theta().agrees_with(e2 * delta(prec)), order=prec)
    rep.add("Delta = product formula", delta(prec).agrees_with(delta_product(prec)), order=prec)
    return rep


def leibniz_holds(f: QSeries, k, g: QSeries, l) -> bool:
    """d_{k+l}(f g) = d_k(f) g + f d_l(g)."""
    k, l = to_rat(k), to_rat(l)
    lhs = serre_derivative(f * g, k + l)
    rhs = serre_derivative(f, k) * g + f * serre_derivative(g, l)
    return lhs.agrees_with(rhs)


def leibniz_check(prec: int):
    from .report import Report

    rep = Report("leibniz")
    forms = {"E4": (E4(prec), 4), "E6": (E6(prec), 6), "Delta": (delta(prec), 12), "E2": (E2(prec), 1)}
    names = list(forms)
    for i, a in enumerate(names):
        for b in names[i:]:
            (f, k), (g, l) = forms[a], forms[b]
            rep.add(f"{a} * {b}", leibniz_holds(f, k, g, l), order=prec)
    return rep


def hecke_composition_check(m_max: int = 4, prec: int = 40):
    """T_m T_n = T_mn on weight 0 for coprime m, n <= m_max."""
    from .report import Report

    rep = Report("hecke composition")
    f = j_invariant(prec) - 744
    for m in range(1, m_max + 1):
        for n in range(1, m_max + 1):
            if gcd(m, n) != 1:
                continue
            two = hecke_weight_k(hecke_weight_k(f, n, 0), m, 0)
            one = hecke_weight_k(f, m * n, 0)
            rep.add(f"T_{m} T_{n} = T_{m * n}", two.agrees_with(one), order=min(two.prec, one.prec))
    return rep


def integrality_check(prec: int):
    from .report import Report

    rep = Report("integrality")
    for name, s in (("E2", E2(prec)), ("E4", E4(prec)), ("E6", E6(prec)), ("Delta", delta(prec)), ("j", j_invariant(prec))):
        rep.add(name, s.is_integral(), order=prec)
    return rep
