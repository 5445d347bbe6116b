"""Reduction of Atkin-like polynomials mod p and a supersingular-polynomial oracle.

The oracle runs over all of F_{p^2} = F_p[y]/(y^2 - c) and tests the Hasse
invariant of a curve with each j-invariant; it never looks at the Atkin-like
polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

import numpy as np

from .atkin import atkin_poly
from .errors import CompositeModulus, InvalidParams, NotPIntegral
from .faber import faber_poly
from .report import Report
from .series import Poly


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise CompositeModulus(f"{p} is not prime")
    if p < 5:
        raise InvalidParams("primes below 5 are not handled")


def smallest_nonresidue(p: int) -> int:
    return next(c for c in range(2, p) if pow(c, (p - 1) // 2, p) == p - 1)


class FpPoly:
    """Polynomial over F_p, ascending coefficients in 0..p-1, no trailing zeros."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs, p: int):
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.p = p
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, FpPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __mul__(self, other: FpPoly) -> FpPoly:
        out = [0] * max(len(self.coeffs) + len(other.coeffs) - 1, 0)
        for i, a in enumerate(self.coeffs):
            for k, b in enumerate(other.coeffs):
                out[i + k] += a * b
        return FpPoly(out, self.p)

    def to_text(self) -> str:
        return Poly(self.coeffs).to_text()

    def __repr__(self) -> str:
        return f"FpPoly({self.to_text()} mod {self.p})"


def reduce_poly_mod_p(f: Poly, p: int) -> FpPoly:
    _check_prime(p)
    out = []
    for c in f.coeffs:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise NotPIntegral(f"coefficient {c} is not {p}-integral")
        out.append(c.numerator * pow(c.denominator, -1, p))
    return FpPoly(out, p)


# ------------------------------------------------------------------- F_{p^2}

class Fp2:
    """F_p[y]/(y^2 - c) with c the smallest quadratic nonresidue."""

    def __init__(self, p: int):
        _check_prime(p)
        self.p = p
        self.c = smallest_nonresidue(p)

    def mul(self, u, v):
        p, c = self.p, self.c
        return ((u[0] * v[0] + c * u[1] * v[1]) % p, (u[0] * v[1] + u[1] * v[0]) % p)

    def add(self, u, v):
        return ((u[0] + v[0]) % self.p, (u[1] + v[1]) % self.p)

    def neg(self, u):
        return ((-u[0]) % self.p, (-u[1]) % self.p)

    def elements(self) -> tuple[np.ndarray, np.ndarray]:
        grid = np.arange(self.p * self.p, dtype=np.int64)
        return grid // self.p, grid % self.p

    def vmul(self, u, v):
        p, c = self.p, self.c
        return ((u[0] * v[0] + c * (u[1] * v[1] % p)) % p, (u[0] * v[1] + u[1] * v[0]) % p)

    def vpow(self, u, e: int):
        out = (np.ones_like(u[0]), np.zeros_like(u[1]))
        base = u
        while e:
            if e & 1:
                out = self.vmul(out, base)
            base = self.vmul(base, base)
            e >>= 1
        return out


def hasse_invariant(F: Fp2, a, b):
    """x^(p-1) coefficient of (x^3 + a x + b)^((p-1)/2), vectorised over arrays a, b."""
    p = F.p
    e = (p - 1) // 2
    acc = (np.zeros_like(a[0]), np.zeros_like(a[1]))
    for i in range(0, (p - 1) // 3 + 1):
        k = p - 1 - 3 * i
        ell = e - i - k
        if k < 0 or ell < 0:
            continue
        coef = factorial(e) // (factorial(i) * factorial(k) * factorial(ell)) % p
        if coef == 0:
            continue
        term = F.vmul(F.vpow(a, k), F.vpow(b, ell))
        acc = ((acc[0] + coef * term[0]) % p, (acc[1] + coef * term[1]) % p)
    return acc


def curve_coefficients(F: Fp2, j0):
    """(a, b) of y^2 = x^3 + a x + b with j-invariant j0 (vectorised)."""
    p = F.p
    x, y = j0
    d = ((1728 - x) % p, (-y) % p)  # 1728 - j0
    jd = F.vmul(j0, d)
    a = ((3 * jd[0]) % p, (3 * jd[1]) % p)
    jdd = F.vmul(jd, d)
    b = ((2 * jdd[0]) % p, (2 * jdd[1]) % p)
    zero = (x == 0) & (y == 0)
    m1728 = (x == 1728 % p) & (y == 0)
    a = (np.where(zero, 0, np.where(m1728, 1, a[0])), np.where(zero | m1728, 0, a[1]))
    b = (np.where(zero, 1, np.where(m1728, 0, b[0])), np.where(zero | m1728, 0, b[1]))
    return a, b


@lru_cache(maxsize=None)
def supersingular_j(p: int) -> tuple[tuple[int, int], ...]:
    """Supersingular j-invariants in F_{p^2} as pairs (x, y) meaning x + y*sqrt(c)."""
    F = Fp2(p)
    j0 = F.elements()
    a, b = curve_coefficients(F, j0)
    h = hasse_invariant(F, a, b)
    hit = (h[0] == 0) & (h[1] == 0)
    return tuple((int(x), int(y)) for x, y in zip(j0[0][hit], j0[1][hit]))


@lru_cache(maxsize=None)
def supersingular_poly(p: int) -> FpPoly:
    """prod (X - j0) over supersingular j0; the coefficients must land in F_p."""
    F = Fp2(p)
    poly = [(1, 0)]
    for root in supersingular_j(p):
        nr = F.neg(root)
        nxt = [(0, 0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = F.add(nxt[i + 1], c)
            nxt[i] = F.add(nxt[i], F.mul(c, nr))
        poly = nxt
    if any(c[1] for c in poly):
        raise InvalidParams(f"supersingular polynomial mod {p} left F_p")
    return FpPoly([c[0] for c in poly], p)


def prime_split(p: int) -> tuple[int, int, int]:
    """(m, delta, eps) with p - 1 = 12m + 4 delta + 6 eps and delta, eps in {0, 1}."""
    r = (p - 1) % 12
    delta, eps = {0: (0, 0), 4: (1, 0), 6: (0, 1), 10: (1, 1)}[r]
    return (p - 1 - 4 * delta - 6 * eps) // 12, delta, eps


def congruence_classes(p: int) -> dict[str, Poly]:
    m, d, e = prime_split(p)
    X = Poly.X()
    Xd = X**d if d else Poly((1,))
    Xe = (X - 1728) ** e if e else Poly((1,))
    return {
        "A2": atkin_poly(2, m + d + e),
        "A6": Xd * atkin_poly(6, m + e),
        "A8": Xe * atkin_poly(8, m + d),
        "A0": Xd * Xe * atkin_poly(0, m + 1),
        "Faber": Xd * Xe * faber_poly(p - 1, m).poly,
    }


def thm24_check(p: int) -> Report:
    _check_prime(p)
    rep = Report(f"congruence p={p}")
    ss = supersingular_poly(p)
    m, d, e = prime_split(p)
    rep.add("deg ss_p = m + delta + eps", ss.degree == m + d + e, str(ss.degree))
    for name, f in congruence_classes(p).items():
        red = reduce_poly_mod_p(f, p)
        rep.add(f"{name} = ss_p", red == ss, f"{red.to_text()} vs {ss.to_text()}")
    return rep


def congruence_sweep(p_max: int = 97) -> Report:
    rep = Report("congruence sweep")
    for p in range(5, p_max + 1):
        if is_prime(p):
            for r in thm24_check(p).results:
                rep.add(f"p={p} {r.id}", r.passed, r.detail)
    return rep
