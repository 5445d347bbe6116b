"""Exact truncated Laurent series, bivariate series and polynomials over Q.

Coefficients are :class:`fractions.Fraction`.  A :class:`QSeries` holds the
coefficients of ``var**val .. var**(prec-1)``; the coefficient at ``prec`` and
beyond is unknown.  Arithmetic tracks precision honestly and never pads an
unknown coefficient with a guess.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial, lcm
from typing import Callable, Iterable, Sequence, Union

from .errors import DivisionByZeroSeries, DomainError, InsufficientPrecision, NonzeroRemainder

Rat = Fraction
Scalar = Union[int, Fraction]

VARIABLES = frozenset({"q", "p", "t", "x", "y", "z", "u", "s_inv"})
DEFAULT_PREC = 32
KARATSUBA_CUTOFF = 64


# ---------------------------------------------------------------- rationals

def to_rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def rat_to_json(x) -> int | str:
    """Integers stay JSON numbers; other rationals become "n/d" strings."""
    x = to_rat(x)
    if x.denominator == 1:
        return x.numerator
    return f"{x.numerator}/{x.denominator}"


def rat_from_json(s) -> Fraction:
    if isinstance(s, bool):
        raise TypeError("booleans are not rationals")
    return to_rat(s)


def gen_binomial(x, k: int) -> Fraction:
    """binom(x, k) for rational x and integer k (zero for k < 0)."""
    if k < 0:
        return Fraction(0)
    x = to_rat(x)
    out = Fraction(1)
    for i in range(k):
        out = out * (x - i) / (i + 1)
    return out


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial (a)_n."""
    if n < 0:
        raise DomainError("pochhammer needs n >= 0")
    a = to_rat(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


# ------------------------------------------------------- integer convolution

def _school(a: Sequence[int], b: Sequence[int], n: int) -> list[int]:
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            lim = n - i
            for k, bk in enumerate(b[:lim]):
                out[i + k] += ai * bk
    return out


def _karatsuba(a: list[int], b: list[int]) -> list[int]:
    la, lb = len(a), len(b)
    if la < KARATSUBA_CUTOFF or lb < KARATSUBA_CUTOFF:
        return _school(a, b, la + lb - 1)
    size = max(la, lb)
    a = a + [0] * (size - la)
    b = b + [0] * (size - lb)
    m = size // 2
    a0, a1, b0, b1 = a[:m], a[m:], b[:m], b[m:]
    z0 = _karatsuba(a0, b0)
    z2 = _karatsuba(a1, b1)
    sa = [x + y for x, y in zip(a0 + [0] * (len(a1) - m), a1)]
    sb = [x + y for x, y in zip(b0 + [0] * (len(b1) - m), b1)]
    z1 = _karatsuba(sa, sb)
    for i, v in enumerate(z0):
        z1[i] -= v
    for i, v in enumerate(z2):
        z1[i] -= v
    out = [0] * (2 * size - 1)
    for i, v in enumerate(z0):
        out[i] += v
    for i, v in enumerate(z1):
        if i + m < len(out):
            out[i + m] += v
    for i, v in enumerate(z2):
        if i + 2 * m < len(out):
            out[i + 2 * m] += v
    return out[: la + lb - 1]


def _int_mul(a: list[int], b: list[int], n: int) -> list[int]:
    a, b = a[:n], b[:n]
    if not a or not b:
        return [0] * n
    if len(a) >= KARATSUBA_CUTOFF and len(b) >= KARATSUBA_CUTOFF:
        full = _karatsuba(a, b)
        return (full + [0] * n)[:n]
    return _school(a, b, n)


def _scaled(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = 1
    for c in cs:
        if c.denominator != 1:
            den = lcm(den, c.denominator)
    if den == 1:
        return [c.numerator for c in cs], 1
    return [c.numerator * (den // c.denominator) for c in cs], den


def mul_trunc(a: Sequence[Fraction], b: Sequence[Fraction], n: int) -> list[Fraction]:
    """First ``n`` coefficients of the product of two coefficient lists."""
    ia, da = _scaled(a[:n])
    ib, db = _scaled(b[:n])
    raw = _int_mul(ia, ib, n)
    d = da * db
    if d == 1:
        return [Fraction(v) for v in raw] + [Fraction(0)] * (n - len(raw))
    return [Fraction(v, d) for v in raw] + [Fraction(0)] * (n - len(raw))


def inv_trunc(a: Sequence[Fraction], n: int) -> list[Fraction]:
    """First ``n`` coefficients of 1/a for a unit power series ``a``."""
    if not a or a[0] == 0:
        raise DivisionByZeroSeries("constant term is zero")
    a0inv = 1 / a[0]
    out = [a0inv]
    for m in range(1, n):
        s = Fraction(0)
        for k in range(1, min(m, len(a) - 1) + 1):
            ak = a[k]
            if ak:
                s += ak * out[m - k]
        out.append(-s * a0inv)
    return out


# ------------------------------------------------------------------ QSeries

class QSeries:
    """Truncated Laurent series ``sum c_e var**e + O(var**prec)``."""

    __slots__ = ("var", "val", "coeffs", "prec")

    def __init__(self, coeffs: Iterable = (), val: int = 0, prec: int | None = None, var: str = "q"):
        cs = tuple(to_rat(c) for c in coeffs)
        if prec is None:
            prec = val + len(cs)
        if var not in VARIABLES:
            raise DomainError(f"unknown series variable {var!r}")
        if prec <= val:
            raise InsufficientPrecision(f"precision {prec} must exceed valuation {val}")
        n = prec - val
        if len(cs) < n:
            cs = cs + (Fraction(0),) * (n - len(cs))
        elif len(cs) > n:
            cs = cs[:n]
        self.var = var
        self.val = int(val)
        self.prec = int(prec)
        self.coeffs = cs

    # construction helpers
    @classmethod
    def zero(cls, prec: int = DEFAULT_PREC, var: str = "q") -> QSeries:
        return cls((0,), prec - 1, prec, var)

    @classmethod
    def one(cls, prec: int = DEFAULT_PREC, var: str = "q") -> QSeries:
        return cls.monomial(0, prec, 1, var)

    @classmethod
    def monomial(cls, e: int, prec: int, c=1, var: str = "q") -> QSeries:
        if e >= prec:
            return cls.zero(prec, var)
        return cls((c,), e, prec, var)

    @classmethod
    def from_function(cls, f: Callable[[int], Scalar], val: int, prec: int, var: str = "q") -> QSeries:
        return cls([f(e) for e in range(val, prec)], val, prec, var)

    # access
    def __getitem__(self, e: int) -> Fraction:
        if e >= self.prec:
            raise InsufficientPrecision(f"coefficient {e} is beyond precision {self.prec}")
        if e < self.val:
            return Fraction(0)
        return self.coeffs[e - self.val]

    coefficient = __getitem__

    def coefficient_list(self, start: int, stop: int) -> list[Fraction]:
        return [self[e] for e in range(start, stop)]

    def true_valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return self.val + i
        return None

    def is_zero(self) -> bool:
        return self.true_valuation() is None

    def _stripped(self) -> tuple[int, list[Fraction]]:
        tv = self.true_valuation()
        if tv is None:
            return self.prec, []
        return tv, list(self.coeffs[tv - self.val:])

    def leading(self) -> Fraction:
        tv = self.true_valuation()
        return Fraction(0) if tv is None else self[tv]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    # structural operations
    def truncate(self, prec: int) -> QSeries:
        if prec > self.prec:
            raise InsufficientPrecision(f"cannot raise precision {self.prec} to {prec}")
        if prec <= self.val:
            return QSeries((0,), prec - 1, prec, self.var)
        return QSeries(self.coeffs[: prec - self.val], self.val, prec, self.var)

    def shift(self, k: int) -> QSeries:
        """Multiply by var**k."""
        return QSeries(self.coeffs, self.val + k, self.prec + k, self.var)

    def with_var(self, var: str) -> QSeries:
        return QSeries(self.coeffs, self.val, self.prec, var)

    def theta(self) -> QSeries:
        """var * d/dvar."""
        return QSeries([c * (self.val + i) for i, c in enumerate(self.coeffs)], self.val, self.prec, self.var)

    def scale_var(self, c) -> QSeries:
        """Substitute var -> c*var."""
        c = to_rat(c)
        return QSeries([a * c ** (self.val + i) for i, a in enumerate(self.coeffs)], self.val, self.prec, self.var)

    def _check_var(self, other: QSeries) -> None:
        if other.var != self.var:
            raise DomainError(f"variable mismatch: {self.var} vs {other.var}")

    # arithmetic
    def __neg__(self) -> QSeries:
        return QSeries([-c for c in self.coeffs], self.val, self.prec, self.var)

    def __add__(self, other) -> QSeries:
        if isinstance(other, QSeries):
            self._check_var(other)
            val = min(self.val, other.val)
            prec = min(self.prec, other.prec)
            return QSeries([self[e] + other[e] for e in range(val, prec)], val, prec, self.var)
        c = to_rat(other)
        if self.prec <= 0 or c == 0:
            return self
        val = min(self.val, 0)
        cs = [self[e] for e in range(val, self.prec)]
        cs[-val] += c
        return QSeries(cs, val, self.prec, self.var)

    __radd__ = __add__

    def __sub__(self, other) -> QSeries:
        return self + (-other)

    def __rsub__(self, other) -> QSeries:
        return (-self) + other

    def __mul__(self, other) -> QSeries:
        if not isinstance(other, QSeries):
            if isinstance(other, (int, Fraction)):
                c = to_rat(other)
                return QSeries([a * c for a in self.coeffs], self.val, self.prec, self.var)
            return NotImplemented
        self._check_var(other)
        ta, ca = self._stripped()
        tb, cb = other._stripped()
        prec = min(ta + other.prec, tb + self.prec)
        val = ta + tb
        if not ca or not cb or val >= prec:
            return QSeries.zero(prec, self.var)
        return QSeries(mul_trunc(ca, cb, prec - val), val, prec, self.var)

    def __rmul__(self, other) -> QSeries:
        return self.__mul__(other)

    def inverse(self) -> QSeries:
        tv, cs = self._stripped()
        if not cs:
            raise DivisionByZeroSeries("series is zero to its precision")
        n = self.prec - tv
        return QSeries(inv_trunc(cs, n), -tv, n - tv, self.var)

    def __truediv__(self, other) -> QSeries:
        if not isinstance(other, QSeries):
            c = to_rat(other)
            if c == 0:
                raise DivisionByZeroSeries("division by zero scalar")
            return QSeries([a / c for a in self.coeffs], self.val, self.prec, self.var)
        self._check_var(other)
        tb, cb = other._stripped()
        if not cb:
            raise DivisionByZeroSeries("divisor is zero to its precision")
        ta, ca = self._stripped()
        rel = min(self.prec - ta, other.prec - tb)
        val = ta - tb
        if not ca:
            return QSeries.zero(val + rel, self.var)
        inv = inv_trunc(cb, rel)
        return QSeries(mul_trunc(ca, inv, rel), val, val + rel, self.var)

    def __rtruediv__(self, other) -> QSeries:
        return self.inverse() * to_rat(other)

    def __pow__(self, n) -> QSeries:
        if isinstance(n, Fraction) and n.denominator != 1:
            return power(self, n)
        n = int(n)
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            # s^0 is exactly 1; any precision is honest
            tv = self.true_valuation() or 0
            return QSeries.one(max(self.prec, self.prec - tv, 1), self.var)
        base = self
        result = None
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # comparison
    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.var != other.var or self.prec != other.prec:
            return False
        lo = min(self.val, other.val)
        return all(self[e] == other[e] for e in range(lo, self.prec))

    __hash__ = None

    def agrees_with(self, other: QSeries, upto: int | None = None) -> bool:
        """Coefficients agree on the range both series know (capped at ``upto``)."""
        self._check_var(other)
        hi = min(self.prec, other.prec)
        if upto is not None:
            hi = min(hi, upto)
        lo = min(self.val, other.val)
        return all(self[e] == other[e] for e in range(lo, hi))

    # output
    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(_term(c, self.val + i, self.var))
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O({self.var}^{self.prec})"

    def to_json(self) -> dict:
        return {
            "variable": self.var,
            "valuation": self.val,
            "precision": self.prec,
            "coefficients": [rat_to_json(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, d: dict) -> QSeries:
        return cls([rat_from_json(c) for c in d["coefficients"]], d["valuation"], d["precision"], d["variable"])


def _term(c: Fraction, e: int, var: str) -> str:
    if e == 0:
        return str(c)
    mono = var if e == 1 else f"{var}^{e}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


# ------------------------------------------------------- series functions

def _power_part(s: QSeries, what: str) -> list[Fraction]:
    """Coefficients 0..prec-1 of a series that must have no negative powers."""
    if s.prec < 1:
        raise InsufficientPrecision(f"{what} needs precision at least 1")
    for e in range(s.val, 0):
        if s[e]:
            raise DomainError(f"{what} needs a power series")
    return [s[e] for e in range(0, s.prec)]


def exp(s: QSeries) -> QSeries:
    """exp(s) for a series without constant term."""
    a = _power_part(s, "exp")
    if a[0]:
        raise DomainError("exp needs a vanishing constant term")
    n = len(a)
    f = [Fraction(1)]
    for m in range(1, n):
        acc = Fraction(0)
        for k in range(1, m + 1):
            if a[k]:
                acc += k * a[k] * f[m - k]
        f.append(acc / m)
    return QSeries(f, 0, n, s.var)


def log(s: QSeries) -> QSeries:
    """log(s) for a series with constant term 1."""
    a = _power_part(s, "log")
    if a[0] != 1:
        raise DomainError("log needs constant term 1")
    n = len(a)
    g = [Fraction(0)]
    for m in range(1, n):
        acc = m * a[m]
        for k in range(1, m):
            if a[m - k]:
                acc -= k * g[k] * a[m - k]
        g.append(acc / m)
    return QSeries(g, 0, n, s.var)


def power(s: QSeries, alpha) -> QSeries:
    """s**alpha for rational alpha; the leading coefficient must be 1."""
    alpha = to_rat(alpha)
    if alpha.denominator == 1:
        return s ** int(alpha)
    tv, cs = s._stripped()
    if not cs:
        raise DomainError("fractional power of a zero series")
    if cs[0] != 1:
        raise DomainError("fractional power needs leading coefficient 1")
    v = tv * alpha
    if v.denominator != 1:
        raise DomainError("fractional power gives a non-integral valuation")
    n = len(cs)
    g = [Fraction(1)]
    for m in range(1, n):
        acc = Fraction(0)
        for k in range(1, m + 1):
            if cs[k]:
                acc += ((alpha + 1) * k - m) * cs[k] * g[m - k]
        g.append(acc / m)
    v = int(v)
    return QSeries(g, v, v + n, s.var)


def binomial_series(alpha, prec: int, var: str = "z", scale=1) -> QSeries:
    """(1 + scale*var)**alpha to O(var**prec)."""
    alpha, scale = to_rat(alpha), to_rat(scale)
    return QSeries([gen_binomial(alpha, n) * scale**n for n in range(prec)], 0, prec, var)


def compose(outer: QSeries, inner: QSeries) -> QSeries:
    """outer(inner) where inner has positive valuation."""
    c = _power_part(outer, "compose")
    v = inner.true_valuation()
    if v is None:
        return QSeries([c[0]], 0, inner.prec, inner.var) if inner.prec > 0 else QSeries.zero(inner.prec, inner.var)
    if v < 1:
        raise DomainError("inner series must have positive valuation")
    prec = min(inner.prec, v * outer.prec)
    inner_c = [inner[e] if e >= inner.val else Fraction(0) for e in range(0, prec)]
    kmax = min(len(c) - 1, (prec - 1) // v)
    acc = [c[kmax]] + [Fraction(0)] * (prec - 1)
    for k in range(kmax - 1, -1, -1):
        acc = mul_trunc(acc, inner_c, prec)
        acc[0] += c[k]
    return QSeries(acc, 0, prec, inner.var)


def reversion(f: QSeries) -> QSeries:
    """Compositional inverse g of f (f(g(z)) = z) for f = c z + ... , c != 0."""
    tv, cs = f._stripped()
    if tv != 1:
        raise DomainError("reversion needs valuation exactly 1")
    n = f.prec
    w = inv_trunc(cs, n - 1)
    g = [Fraction(0)]
    wp = [Fraction(1)] + [Fraction(0)] * (n - 2)
    for m in range(1, n):
        wp = mul_trunc(wp, w, n - 1)
        g.append(wp[m - 1] / m)
    return QSeries(g, 0, n, f.var)


def borel(s: QSeries) -> QSeries:
    """sum a_n x^n  ->  sum a_n x^n / n!"""
    a = _power_part(s, "borel")
    return QSeries([c / factorial(n) for n, c in enumerate(a)], 0, len(a), s.var)


def laplace(s: QSeries) -> QSeries:
    """sum a_n x^n  ->  sum a_n n! s_inv^(n+1)."""
    a = _power_part(s, "laplace")
    return QSeries([c * factorial(n) for n, c in enumerate(a)], 1, len(a) + 1, "s_inv")


def series_arith(a: QSeries, b, op: str) -> QSeries:
    """Dispatch ``op`` in {'add', 'sub', 'mul', 'div'}."""
    table = {"add": a.__add__, "sub": a.__sub__, "mul": a.__mul__, "div": a.__truediv__}
    if op not in table:
        raise DomainError(f"unknown operation {op!r}")
    return table[op](b)


def series_exp_log(a: QSeries, which: str) -> QSeries:
    if which == "exp":
        return exp(a)
    if which == "log":
        return log(a)
    raise DomainError(f"unknown function {which!r}")


series_compose = compose


def borel_laplace(a: QSeries, which: str) -> QSeries:
    if which == "borel":
        return borel(a)
    if which == "laplace":
        return laplace(a)
    raise DomainError(f"unknown transform {which!r}")


# ----------------------------------------------------------------- BiSeries

class BiSeries:
    """Series in an outer variable whose coefficients are QSeries in an inner one.

    Every inner series is truncated to one shared inner precision.
    """

    __slots__ = ("outer", "val", "rows", "prec", "inner_var", "inner_prec")

    def __init__(self, rows: Sequence[QSeries], val: int = 0, prec: int | None = None,
                 outer: str = "p", inner_var: str | None = None, inner_prec: int | None = None):
        rows = list(rows)
        if prec is None:
            prec = val + len(rows)
        if prec <= val:
            raise InsufficientPrecision("outer precision must exceed outer valuation")
        if inner_var is None:
            if not rows:
                raise DomainError("inner variable needed for an empty BiSeries")
            inner_var = rows[0].var
        if inner_prec is None:
            inner_prec = min(r.prec for r in rows) if rows else 1
        fixed = []
        for r in rows[: prec - val]:
            if r.var != inner_var:
                raise DomainError("inner variable mismatch")
            fixed.append(r.truncate(inner_prec))
        while len(fixed) < prec - val:
            fixed.append(QSeries.zero(inner_prec, inner_var))
        self.outer = outer
        self.val = val
        self.prec = prec
        self.rows = tuple(fixed)
        self.inner_var = inner_var
        self.inner_prec = inner_prec

    @classmethod
    def outer_product(cls, a: QSeries, b: QSeries) -> BiSeries:
        """a(outer) * b(inner)."""
        return cls([b * c for c in a.coeffs], a.val, a.prec, a.var, b.var, b.prec)

    @classmethod
    def scalar(cls, c, prec: int, inner_prec: int, outer: str = "p", inner_var: str = "q") -> BiSeries:
        return cls([QSeries.one(inner_prec, inner_var) * to_rat(c)], 0, prec, outer, inner_var, inner_prec)

    def row(self, i: int) -> QSeries:
        if i >= self.prec:
            raise InsufficientPrecision(f"outer coefficient {i} beyond precision {self.prec}")
        if i < self.val:
            return QSeries.zero(self.inner_prec, self.inner_var)
        return self.rows[i - self.val]

    def coefficient(self, i: int, k: int) -> Fraction:
        return self.row(i)[k]

    def _like(self, rows, val, prec, inner_prec=None) -> BiSeries:
        return BiSeries(rows, val, prec, self.outer, self.inner_var, inner_prec)

    def __neg__(self) -> BiSeries:
        return self._like([-r for r in self.rows], self.val, self.prec, self.inner_prec)

    def __add__(self, other) -> BiSeries:
        if not isinstance(other, BiSeries):
            return self + BiSeries.scalar(other, self.prec, self.inner_prec, self.outer, self.inner_var)
        val, prec = min(self.val, other.val), min(self.prec, other.prec)
        return self._like([self.row(i) + other.row(i) for i in range(val, prec)], val, prec)

    __radd__ = __add__

    def __sub__(self, other) -> BiSeries:
        return self + (-other)

    def __mul__(self, other) -> BiSeries:
        if not isinstance(other, BiSeries):
            c = to_rat(other)
            return self._like([r * c for r in self.rows], self.val, self.prec, self.inner_prec)
        val = self.val + other.val
        prec = min(self.val + other.prec, other.val + self.prec)
        rows = []
        for n in range(val, prec):
            acc = None
            for i in range(self.val, n - other.val + 1):
                term = self.row(i) * other.row(n - i)
                acc = term if acc is None else acc + term
            rows.append(acc)
        return self._like(rows, val, prec)

    __rmul__ = __mul__

    def inverse(self) -> BiSeries:
        a0 = self.rows[0]
        if a0.is_zero():
            raise DivisionByZeroSeries("leading outer coefficient is zero")
        n = self.prec - self.val
        b0 = a0.inverse()
        out = [b0]
        for m in range(1, n):
            acc = None
            for k in range(1, m + 1):
                term = self.rows[k] * out[m - k]
                acc = term if acc is None else acc + term
            out.append(-(acc * b0))
        return self._like(out, -self.val, n - self.val)

    def __truediv__(self, other) -> BiSeries:
        if not isinstance(other, BiSeries):
            c = to_rat(other)
            return self._like([r / c for r in self.rows], self.val, self.prec, self.inner_prec)
        return self * other.inverse()

    def exp(self) -> BiSeries:
        """exp of a BiSeries with positive outer valuation."""
        if any(not self.row(i).is_zero() for i in range(self.val, 1)):
            raise DomainError("exp needs positive outer valuation")
        n = self.prec
        a = [self.row(i) for i in range(0, n)]
        one = QSeries.one(self.inner_prec, self.inner_var)
        f = [one]
        for m in range(1, n):
            acc = None
            for k in range(1, m + 1):
                term = a[k] * f[m - k] * k
                acc = term if acc is None else acc + term
            f.append(acc / m)
        return self._like(f, 0, n)

    def truncate(self, prec: int, inner_prec: int | None = None) -> BiSeries:
        if prec > self.prec:
            raise InsufficientPrecision("cannot raise outer precision")
        ip = self.inner_prec if inner_prec is None else inner_prec
        if ip > self.inner_prec:
            raise InsufficientPrecision("cannot raise inner precision")
        val = min(self.val, prec - 1)
        return self._like([self.row(i) for i in range(val, prec)], val, prec, ip)

    def agrees_with(self, other: BiSeries, outer_upto: int | None = None, inner_upto: int | None = None) -> bool:
        hi = min(self.prec, other.prec)
        if outer_upto is not None:
            hi = min(hi, outer_upto)
        ihi = min(self.inner_prec, other.inner_prec)
        if inner_upto is not None:
            ihi = min(ihi, inner_upto)
        for i in range(min(self.val, other.val), hi):
            a, b = self.row(i), other.row(i)
            lo = min(a.val, b.val)
            if any(a[k] != b[k] for k in range(lo, ihi)):
                return False
        return True

    def box(self, outer_stop: int, inner_stop: int, outer_start: int = 0, inner_start: int = 0) -> list[list[Fraction]]:
        return [[self.row(i)[k] for k in range(inner_start, inner_stop)] for i in range(outer_start, outer_stop)]

    def transpose(self) -> BiSeries:
        """Swap outer and inner variables (both must be power series)."""
        lo = min([self.val] + [r.val for r in self.rows])
        if lo < 0:
            raise DomainError("transpose needs nonnegative exponents")
        rows = []
        for k in range(0, self.inner_prec):
            rows.append(QSeries([self.row(i)[k] for i in range(0, self.prec)], 0, self.prec, self.outer))
        return BiSeries(rows, 0, self.inner_prec, self.inner_var, self.outer, self.prec)

    def __repr__(self) -> str:
        return f"BiSeries({self.outer}: val={self.val}, prec={self.prec}; {self.inner_var}-prec={self.inner_prec})"


# --------------------------------------------------------------------- Poly

class Poly:
    """Dense univariate polynomial over Q, coefficients in ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def X(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable) -> Poly:
        out = cls((1,))
        for r in roots:
            out = out * cls((-to_rat(r), 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading() == 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @staticmethod
    def _coerce(other) -> Poly:
        if isinstance(other, Poly):
            return other
        return Poly((to_rat(other),))

    def __add__(self, other) -> Poly:
        o = self._coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly(self[i] + o[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> Poly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Poly:
        return self._coerce(other) - self

    def __mul__(self, other) -> Poly:
        if isinstance(other, QSeries):
            return NotImplemented
        o = self._coerce(other)
        if not self.coeffs or not o.coeffs:
            return Poly()
        n = len(self.coeffs) + len(o.coeffs) - 1
        return Poly(mul_trunc(list(self.coeffs), list(o.coeffs), n))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        out = Poly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other) -> tuple[Poly, Poly]:
        o = self._coerce(other)
        if not o.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = len(r) - len(o.coeffs)
        if dq < 0:
            return Poly(), Poly(r)
        quo = [Fraction(0)] * (dq + 1)
        lead = o.coeffs[-1]
        for i in range(dq, -1, -1):
            c = r[i + len(o.coeffs) - 1] / lead
            quo[i] = c
            if c:
                for k, oc in enumerate(o.coeffs):
                    r[i + k] -= c * oc
        return Poly(quo), Poly(r[: len(o.coeffs) - 1])

    def exact_div(self, other) -> Poly:
        quo, rem = divmod(self, other)
        if rem:
            raise NonzeroRemainder(f"{self} is not divisible by {other}")
        return quo

    def __call__(self, x):
        if not self.coeffs:
            return Fraction(0) if not isinstance(x, QSeries) else x * 0
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_text(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else f"{var}^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            if not parts:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def to_latex(self, var: str = "X") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for e in range(self.degree, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            num = str(a) if a.denominator == 1 else rf"\frac{{{a.numerator}}}{{{a.denominator}}}"
            if e == 0:
                body = num
            else:
                mono = var if e == 1 else f"{var}^{{{e}}}"
                body = mono if a == 1 else num + mono
            if not parts:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"

    def to_json(self) -> dict:
        return {"coefficients": [rat_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, d: dict) -> Poly:
        return cls(rat_from_json(c) for c in d["coefficients"])


X = Poly.X()
