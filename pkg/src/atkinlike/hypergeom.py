"""Generalised hypergeometric series and the companion series G21.

G21(a, b; z) is the power-series part of the second solution at z = 0 of the
hypergeometric equation with c = 1:

    G21 = sum_{n>=1} (a)_n (b)_n / n!^2 * H_n * z^n,
    H_n = sum_{k<n} 1/(a+k) + 1/(b+k) - 2/(1+k).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .errors import InvalidParams
from .series import Poly, QSeries, binomial_series, compose, pochhammer, to_rat


def _is_nonpositive_int(x: Fraction) -> bool:
    return x.denominator == 1 and x <= 0


@dataclass(frozen=True)
class HypParams:
    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(to_rat(a) for a in self.upper))
        object.__setattr__(self, "lower", tuple(to_rat(b) for b in self.lower))
        if len(self.upper) != len(self.lower) + 1:
            raise InvalidParams("need one more upper than lower parameter")
        for b in self.lower:
            if _is_nonpositive_int(b):
                raise InvalidParams(f"lower parameter {b} is a non-positive integer")


def pfq_series(upper: Sequence, lower: Sequence, prec: int, var: str = "z") -> QSeries:
    """pFq(upper; lower; var) to O(var^prec)."""
    hp = HypParams(tuple(upper), tuple(lower))
    coeffs = [Fraction(1)]
    term = Fraction(1)
    for n in range(prec - 1):
        num = Fraction(1)
        for a in hp.upper:
            num *= a + n
        den = Fraction(n + 1)
        for b in hp.lower:
            den *= b + n
        term = term * num / den
        coeffs.append(term)
    return QSeries(coeffs, 0, prec, var)


def hyp2f1(a, b, c, prec: int, var: str = "z") -> QSeries:
    return pfq_series((a, b), (c,), prec, var)


def g21_series(a, b, prec: int, var: str = "z") -> QSeries:
    a, b = to_rat(a), to_rat(b)
    if _is_nonpositive_int(a) or _is_nonpositive_int(b):
        raise InvalidParams("G21 parameters must avoid non-positive integers")
    coeffs = [Fraction(0)]
    h = Fraction(0)
    for n in range(1, prec):
        k = n - 1
        h += 1 / (a + k) + 1 / (b + k) - Fraction(2, 1 + k)
        coeffs.append(pochhammer(a, n) * pochhammer(b, n) / factorial(n) ** 2 * h)
    return QSeries(coeffs, 0, prec, var)


def g21_ode_residual(a, b, prec: int) -> QSeries:
    """Residual of the equation satisfied by G21 + log(z) 2F1(a, b; 1; z).

    Writing theta = z d/dz, F = 2F1 and G = G21, the residual is
    theta^2 G - z (theta+a)(theta+b) G + 2 theta F - z (2 theta + a + b) F.
    """
    a, b = to_rat(a), to_rat(b)
    F = hyp2f1(a, b, 1, prec)
    G = g21_series(a, b, prec)
    tG = G.theta()
    inner = tG.theta() + tG * (a + b) + G * (a * b)
    res = tG.theta() - inner.shift(1) + F.theta() * 2 - (F.theta() * 2 + F * (a + b)).shift(1)
    return res.truncate(prec)


def euler_transform_check(a, b, c, prec: int) -> bool:
    """2F1(a,b;c;z) == (1-z)^(c-a-b) 2F1(c-a,c-b;c;z)."""
    a, b, c = to_rat(a), to_rat(b), to_rat(c)
    lhs = hyp2f1(a, b, c, prec)
    rhs = binomial_series(c - a - b, prec, "z", -1) * hyp2f1(c - a, c - b, c, prec)
    return lhs == rhs


# ------------------------------------------------ hypergeometric expansions

F1_PARAMS = (Fraction(1, 12), Fraction(5, 12))


def f1_of(z: QSeries) -> QSeries:
    """2F1(1/12, 5/12; 1; z) composed with a series z of positive valuation."""
    return compose(hyp2f1(*F1_PARAMS, 1, z.prec, z.var), z)


def hyp_of(a, b, c, z: QSeries) -> QSeries:
    return compose(hyp2f1(a, b, c, z.prec, z.var), z)


def g1_of(z: QSeries) -> QSeries:
    return compose(g21_series(*F1_PARAMS, z.prec, z.var), z)


def alpha_beta_polys(n: int, which: str) -> Poly:
    """Polynomial parts of the three basic expansions in u = 1/X.

    alpha0: X^n 2F1(1/12, 5/12; 1; 1728/X)
    alpha1: X^(n-1) (X - 1728) 2F1(7/12, 11/12; 1; 1728/X)
    beta:   X^n 2F1(-1/12, 7/12; 1; 1728/X)
    """
    if n < 0:
        raise InvalidParams("degree must be non-negative")
    if which == "alpha0":
        F = hyp2f1(Fraction(1, 12), Fraction(5, 12), 1, n + 1, "u").scale_var(1728)
    elif which == "alpha1":
        F = hyp2f1(Fraction(7, 12), Fraction(11, 12), 1, n + 1, "u").scale_var(1728)
        F = F * QSeries([1, -1728], 0, n + 1, "u")
    elif which == "beta":
        F = hyp2f1(Fraction(-1, 12), Fraction(7, 12), 1, n + 1, "u").scale_var(1728)
    else:
        raise InvalidParams(f"unknown family {which!r}")
    return Poly(F[n - i] for i in range(n + 1))
