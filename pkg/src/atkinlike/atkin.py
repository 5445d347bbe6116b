"""Atkin-like polynomials A_{n,r} and their adjoints B_{n,r}, r in {0, 2, 6, 8}.

Two independent constructions are provided: the three-term recursion seeded
by the low-degree table, and the closed binomial-sum formula.  The other
weights 4, 10 and 14 are handled through index aliases (see :func:`class_poly`).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import IndexBelowRange, IndexOutOfRange, NonzeroRemainder, NotMonic, PoleAtLambda, UnsupportedPair
from .hypergeom import alpha_beta_polys
from .report import Report
from .series import Poly, gen_binomial, pochhammer, to_rat

R_VALUES = (0, 2, 6, 8)

_X = Poly.X()


def _p(*desc) -> Poly:
    return Poly(desc)


# Low-degree table: (family, r) -> [W_0, W_1, (W_2)].
SEED_TABLE: dict[tuple[str, int], tuple[Poly, ...]] = {
    ("A", 0): (Poly(), _p(1), _p(-824, 1)),
    ("A", 2): (_p(1), _p(-720, 1), _p(269280, -1640, 1)),
    ("A", 6): (_p(1), _p(-1266, 1)),
    ("A", 8): (_p(1), _p(-330, 1)),
    ("B", 0): (_p(1), _p(-1008, 1), _p(497952, -1832, 1)),
    ("B", 2): (Poly(), _p(1), _p(-920, 1)),
    ("B", 6): (_p(1), _p(-546, 1)),
    ("B", 8): (_p(1), _p(-1338, 1)),
}


def _check_r(r: int) -> None:
    if r not in R_VALUES:
        raise UnsupportedPair(f"r must be one of {R_VALUES}, got {r}")


def _start(r: int) -> int:
    """First index at which the three-term recursion is valid."""
    return 2 if r in (0, 2) else 1


# ------------------------------------------------------------ coefficients

def _a0(n: Fraction) -> Fraction:
    return 24 * (144 * n * n - 41) / ((2 * n + 1) * (2 * n - 1))


def _b0(n: Fraction) -> Fraction:
    return 36 * (12 * n - 11) * (12 * n - 7) * (12 * n - 5) * (12 * n - 1) / (n * (n - 1) * (2 * n - 1) ** 2)


def _a2(n: Fraction) -> Fraction:
    return 24 * (144 * n * n - 29) / ((2 * n + 1) * (2 * n - 1))


def _b2(n: Fraction) -> Fraction:
    return 36 * (12 * n - 13) * (12 * n - 7) * (12 * n - 5) * (12 * n + 1) / (n * (n - 1) * (2 * n - 1) ** 2)


_HALF = Fraction(1, 2)
_FORMULAS = {
    0: (_a0, _b0, Fraction(0)),
    2: (_a2, _b2, Fraction(0)),
    6: (_a0, _b0, _HALF),
    8: (_a2, _b2, _HALF),
}


def recursion_a(r: int, n) -> Fraction:
    """The a_{n,r} formula, evaluated wherever it is finite."""
    _check_r(r)
    fa, _, shift = _FORMULAS[r]
    try:
        return fa(to_rat(n) + shift)
    except ZeroDivisionError:
        raise IndexOutOfRange(f"a_{{{n},{r}}} is singular") from None


def recursion_coeffs(r: int, n) -> tuple[Fraction, Fraction]:
    """(a_{n,r}, b_{n,r}) inside the range where the recursion holds."""
    _check_r(r)
    n = to_rat(n)
    if n < _start(r):
        raise IndexOutOfRange(f"recursion for r={r} starts at n={_start(r)}")
    fa, fb, shift = _FORMULAS[r]
    return fa(n + shift), fb(n + shift)


# ------------------------------------------------------------- recursion

@lru_cache(maxsize=None)
def _recursive(family: str, r: int, n: int) -> Poly:
    seeds = SEED_TABLE[(family, r)]
    if n < len(seeds):
        return seeds[n]
    a, b = recursion_coeffs(r, n - 1)
    return (_X - a) * _recursive(family, r, n - 1) - _recursive(family, r, n - 2) * b


def atkin_poly_recursive(r: int, n: int, family: str = "A") -> Poly:
    _check_r(r)
    if n < 0:
        raise IndexOutOfRange("n must be non-negative")
    if family not in ("A", "B"):
        raise ValueError("family must be 'A' or 'B'")
    return _recursive(family, r, n)


def atkin_poly(r: int, n: int) -> Poly:
    return atkin_poly_recursive(r, n, "A")


def adjoint_poly(r: int, n: int) -> Poly:
    return atkin_poly_recursive(r, n, "B")


# ---------------------------------------------------------- closed formula

def dim_modular(k: int) -> int:
    """Dimension of the space of level-one modular forms of weight k."""
    if k < 0 or k % 2:
        return 0
    if k % 12 == 2:
        return k // 12
    return k // 12 + 1


def degree(r: int, n: int) -> int:
    """d_{n,r} = dim M_{12n+r-2} - 1."""
    return dim_modular(12 * n + r - 2) - 1


# r -> (d_A, kappas_A, d_B, kappas_B) as functions of n.
def _closed_params(r: int, n: int):
    F = Fraction
    if r == 0:
        return n - 1, (n - F(11, 12), n - F(7, 12), 2 * n - 1), n, (n - F(1, 12), n - F(5, 12), 2 * n - 1)
    if r == 2:
        return n, (n + F(1, 12), n - F(7, 12), 2 * n - 1), n - 1, (n - F(13, 12), n - F(5, 12), 2 * n - 1)
    if r == 6:
        return n, (n + F(1, 12), n + F(5, 12), 2 * n), n, (n - F(1, 12), n - F(5, 12), 2 * n)
    return n, (n + F(1, 12), n - F(7, 12), 2 * n), n, (n - F(1, 12), n + F(7, 12), 2 * n)


def _phi(i: int, lead: tuple[Fraction, Fraction], kappas) -> Fraction:
    k1, k2, k3 = kappas
    total = Fraction(0)
    for k in range(i + 1):
        total += ((-1) ** k * gen_binomial(lead[0], i - k) * gen_binomial(lead[1], i - k)
                  * gen_binomial(k1, k) * gen_binomial(k2, k) / gen_binomial(k3, k))
    return total


@lru_cache(maxsize=None)
def atkin_poly_closed(r: int, n: int, family: str = "A") -> Poly:
    """Binomial-sum formula; valid for n >= 1 (r in {0, 2}) or n >= 0 (r in {6, 8})."""
    _check_r(r)
    if n < (1 if r in (0, 2) else 0):
        raise IndexOutOfRange(f"closed formula for r={r} needs larger n, got {n}")
    dA, kA, dB, kB = _closed_params(r, n)
    if family == "A":
        d, kappas, lead = dA, kA, (Fraction(-1, 12), Fraction(-5, 12))
    elif family == "B":
        d, kappas, lead = dB, kB, (Fraction(1, 12), Fraction(-7, 12))
    else:
        raise ValueError("family must be 'A' or 'B'")
    if d < 0:
        return Poly()
    # coefficient of X^(d-i) is 12^(3i) phi_i
    return Poly([1728 ** (d - e) * _phi(d - e, lead, kappas) for e in range(d + 1)])


def closed_via_alpha(r: int, n: int, family: str = "A") -> Poly:
    """The same polynomials re-expanded in the alpha0 / beta truncations."""
    dA, kA, dB, kB = _closed_params(r, n)
    d, (k1, k2, k3), base = (dA, kA, "alpha0") if family == "A" else (dB, kB, "beta")
    out = Poly()
    for k in range(d + 1):
        c = (-1728) ** k * gen_binomial(k1, k) * gen_binomial(k2, k) / gen_binomial(k3, k)
        out = out + alpha_beta_polys(d - k, base) * c
    return out


# ---------------------------------------------------------- aliases / classes

def class_of_weight(delta: int, eps: int) -> int:
    """The index label 4*delta + 6*eps in {0, 4, 6, 8, 10, 14}."""
    return 4 * delta + 6 * eps


def class_poly(label: int, m: int) -> Poly:
    """A_{m, label} including the aliases A_{m,4}=A_{m,0}, A_{m,10}=A_{m,6}, A_{m,14}=A_{m+1,2}."""
    if label in (0, 4):
        return atkin_poly(0, m)
    if label in (6, 10):
        return atkin_poly(6, m)
    if label == 8:
        return atkin_poly(8, m)
    if label == 14:
        if m < -1:
            raise IndexBelowRange("A_{m,14} needs m >= -1")
        return atkin_poly(2, m + 1)
    raise UnsupportedPair(f"no Atkin-like family for label {label}")


def class_index_range(label: int, deg: int) -> range:
    """Indices m with 0 <= deg A_{m,label} <= deg."""
    if label in (0, 4):
        return range(1, deg + 2)
    if label == 14:
        return range(-1, deg)
    return range(0, deg + 1)


def class_index_of_degree(label: int, d: int) -> int:
    if label in (0, 4):
        return d + 1
    if label == 14:
        return d - 1
    return d


# ----------------------------------------------------------- special values

def special_value(r: int, n: int, at: int) -> Fraction:
    """Closed forms of A_{n,r}(0) and A_{n,r}(1728) for the four available pairs."""
    if n < 1:
        raise IndexOutOfRange("special values need n >= 1")
    F = Fraction
    from math import factorial
    if (r, at) == (2, 0):
        return F((-12) ** (3 * n + 1)) * pochhammer(F(-1, 12), n) * pochhammer(F(5, 12), n) / factorial(2 * n - 1)
    if (r, at) == (2, 1728):
        return -F(12 ** (3 * n + 1)) * pochhammer(F(-1, 12), n) * pochhammer(F(7, 12), n) / factorial(2 * n - 1)
    if (r, at) == (6, 1728):
        return F(12 ** (3 * n)) * pochhammer(F(7, 12), n) * pochhammer(F(11, 12), n) / factorial(2 * n)
    if (r, at) == (8, 0):
        return F((-12) ** (3 * n)) * pochhammer(F(5, 12), n) * pochhammer(F(11, 12), n) / factorial(2 * n)
    raise UnsupportedPair(f"no closed special value for r={r} at X={at}")


def special_values(r: int, n: int, at: int) -> Fraction:
    return special_value(r, n, at)


# ----------------------------------------------------- Christoffel transform

def christoffel_transform(p_n: Poly, p_next: Poly, lam) -> Poly:
    """(p_{n+1} - p_{n+1}(lam)/p_n(lam) p_n) / (X - lam)."""
    if not p_n.is_monic() or not p_next.is_monic():
        raise NotMonic("Christoffel transform needs monic polynomials")
    lam = to_rat(lam)
    pl = p_n(lam)
    if pl == 0:
        raise PoleAtLambda(f"p_n vanishes at {lam}")
    num = p_next - p_n * (p_next(lam) / pl)
    quo, rem = divmod(num, Poly((-lam, 1)))
    if rem:
        raise NonzeroRemainder("numerator not divisible by X - lambda")
    return quo


def geronimus_step(n: int) -> Poly:
    """A_{n,6} + 6(12n+1)(12n-5)/(n(2n-1)) A_{n-1,6}, which should equal A_{n,2}."""
    c = Fraction(6 * (12 * n + 1) * (12 * n - 5), n * (2 * n - 1))
    return atkin_poly(6, n) + atkin_poly(6, n - 1) * c


# ----------------------------------------------------- expansion identities

def C_coeff(n: int, k: int) -> Fraction:
    F = Fraction
    return (-1) ** k * gen_binomial(n + F(5, 12), k + 1) + gen_binomial(n + F(7, 12), k + 1)


def _alpha_identities(n: int) -> list[tuple[str, Poly, Poly]]:
    F = Fraction
    A0, A2, A6, A8 = (atkin_poly(r, n) for r in (0, 2, 6, 8))
    Xm = Poly((-1728, 1))

    def sum_alpha(top, kap1, kap2, kap3, base, offset):
        out = Poly()
        for k in range(top + 1):
            c = (-1728) ** k * gen_binomial(kap1, k) * gen_binomial(kap2, k) / gen_binomial(kap3, k)
            out = out + alpha_beta_polys(n - k + offset, base) * c
        return out

    rows = [
        ("XA0", _X * A0, sum_alpha(n, n - F(11, 12), n - F(7, 12), 2 * n - 1, "alpha0", 0)),
        ("(X-1728)A0", Xm * A0, sum_alpha(n, n - F(1, 12), n - F(5, 12), 2 * n - 1, "alpha1", 0)),
        ("A2", A2, sum_alpha(n, n - F(13, 12), n - F(5, 12), 2 * n - 1, "alpha1", 0)),
        ("XA6", _X * A6, sum_alpha(n + 1, n - F(1, 12), n - F(5, 12), 2 * n, "alpha1", 1)),
        ("(X-1728)A8", Xm * A8, sum_alpha(n + 1, n - F(1, 12), n + F(7, 12), 2 * n, "alpha1", 1)),
    ]
    if n >= 2:
        rows.append(("X(X-1728)A0", _X * Xm * A0,
                     sum_alpha(n + 1, n - F(1, 12), n - F(5, 12), 2 * n - 1, "alpha1", 1)))
    return rows


def _three_term_identities(n: int) -> list[tuple[str, Poly, Poly]]:
    F = Fraction
    A = atkin_poly
    Xm = Poly((-1728, 1))
    jj = _X * Xm
    return [
        ("XA6", _X * A(6, n), A(2, n + 1) + A(2, n) * F(6 * (12 * n - 1) * (12 * n + 5), n * (2 * n + 1))),
        ("(X-1728)A8", Xm * A(8, n), A(2, n + 1) - A(2, n) * F(6 * (12 * n - 1) * (12 * n + 7), n * (2 * n + 1))),
        ("via A6", jj * A(0, n + 1),
         _X * A(6, n + 1) - _X * A(6, n) * F(6 * (12 * n + 7) * (12 * n + 11), (n + 1) * (2 * n + 1))),
        ("via A8", jj * A(0, n + 1),
         Xm * A(8, n + 1) + Xm * A(8, n) * F(6 * (12 * n + 5) * (12 * n + 11), (n + 1) * (2 * n + 1))),
        ("via A2", jj * A(0, n + 1),
         A(2, n + 2) - A(2, n + 1) * F(24 * (12 * n + 11), (2 * n + 1) * (2 * n + 3))
         - A(2, n) * F(36 * (12 * n - 1) * (12 * n + 5) * (12 * n + 7) * (12 * n + 11), n * (n + 1) * (2 * n + 1) ** 2)),
    ]


def _orthogonal_expansions(n: int) -> list[tuple[str, Poly, Poly]]:
    F = Fraction
    A = atkin_poly
    b = gen_binomial

    def expand(coef, target_r, k_top=n):
        out = Poly()
        for k in range(k_top + 1):
            out = out + A(target_r, n - k) * coef(k)
        return out

    return [
        ("A6 by A2", A(6, n), expand(lambda k: F(-1728) ** k * b(n + F(1, 12), k) * b(n - F(5, 12), k)
                                      / (b(2 * k, k) * b(2 * n, 2 * k)), 2)),
        ("A8 by A2", A(8, n), expand(lambda k: F(1728) ** k * b(n + F(1, 12), k) * b(n - F(7, 12), k)
                                      / (b(2 * k, k) * b(2 * n, 2 * k)), 2)),
        ("A0 by A6", A(0, n + 1), expand(lambda k: F(1728) ** k * b(n + F(1, 12), k) * b(n + F(5, 12), k)
                                          / (b(2 * k, k) * b(2 * n + 1, 2 * k)), 6)),
        ("A0 by A8", A(0, n + 1), expand(lambda k: F(-1728) ** k * b(n + F(1, 12), k) * b(n + F(7, 12), k)
                                          / (b(2 * k, k) * b(2 * n + 1, 2 * k)), 8)),
        ("A0 by A2", A(0, n + 1), expand(lambda k: F(-1728) ** k * C_coeff(n, k) * b(n + F(1, 12), k)
                                          / (b(2 * k + 1, k) * b(2 * n + 1, 2 * k + 1)), 2)),
    ]


def _c_coeff_sum_sides(n: int, r: int) -> tuple[Fraction, Fraction]:
    from math import factorial
    F = Fraction
    lhs = factorial(r + 1) * C_coeff(n, r)
    rhs = sum((F((-1) ** k * (2 * n - 2 * k + 1)) * gen_binomial(n + F(5, 12), k)
               * gen_binomial(n - k - F(5, 12), r - k) * factorial(k) * factorial(r - k)
               for k in range(r + 1)), F(0))
    return lhs, rhs


EXPANSION_FAMILIES = ("alpha_expansions", "three_term", "orthogonal_expansions", "geronimus", "c_coeff_sum", "christoffel")


def expansion_identities_check(which: str, n_max: int) -> Report:
    """Check one family of expansion identities for all n up to n_max."""
    rep = Report(which)
    if which == "alpha_expansions":
        for n in range(1, n_max + 1):
            for name, lhs, rhs in _alpha_identities(n):
                rep.add(f"{name} n={n}", lhs == rhs)
    elif which == "three_term":
        for n in range(1, n_max + 1):
            for name, lhs, rhs in _three_term_identities(n):
                rep.add(f"{name} n={n}", lhs == rhs)
    elif which == "orthogonal_expansions":
        for n in range(0, n_max + 1):
            for name, lhs, rhs in _orthogonal_expansions(n):
                rep.add(f"{name} n={n}", lhs == rhs)
    elif which == "geronimus":
        for n in range(1, n_max + 1):
            rep.add(f"A2 from A6 n={n}", geronimus_step(n) == atkin_poly(2, n))
    elif which == "c_coeff_sum":
        for n in range(0, n_max + 1):
            for r in range(0, n_max + 1):
                lhs, rhs = _c_coeff_sum_sides(n, r)
                rep.add(f"n={n} r={r}", lhs == rhs, f"{lhs} vs {rhs}")
    elif which == "christoffel":
        A = atkin_poly
        for n in range(0, n_max + 1):
            rep.add(f"A6 from A2 n={n}", christoffel_transform(A(2, n), A(2, n + 1), 0) == A(6, n))
            rep.add(f"A8 from A2 n={n}", christoffel_transform(A(2, n), A(2, n + 1), 1728) == A(8, n))
            rep.add(f"A0 from A6 n={n}", christoffel_transform(A(6, n), A(6, n + 1), 1728) == A(0, n + 1))
            rep.add(f"A0 from A8 n={n}", christoffel_transform(A(8, n), A(8, n + 1), 0) == A(0, n + 1))
    else:
        raise ValueError(f"unknown identity family {which!r}")
    return rep


def routes_agree(n_max: int) -> Report:
    """Recursion versus closed formula, both families, every r."""
    rep = Report("recursion vs closed")
    for r in R_VALUES:
        lo = 1 if r in (0, 2) else 0
        for n in range(lo, n_max + 1):
            for fam in ("A", "B"):
                rep.add(f"{fam}_{{{n},{r}}}", atkin_poly_recursive(r, n, fam) == atkin_poly_closed(r, n, fam))
    return rep
