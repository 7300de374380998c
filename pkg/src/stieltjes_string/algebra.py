"""Exact scalar and function algebra.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator, zero stored as 0/1).  On top of that this module provides exact
complex rationals, dense univariate polynomials over Q and canonical rational
functions, which is all the pipeline needs to manipulate Weyl-Titchmarsh
functions symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import EvaluationAtPole, NoHerglotzExpansion

Scalar = Union[int, Fraction]


def rat_normalize(num: int, den: int = 1) -> Fraction:
    """Return ``num/den`` in canonical form.

    >>> rat_normalize(3, -6)
    Fraction(-1, 2)
    """
    if den == 0:
        raise ZeroDivisionError("division by zero")
    return Fraction(num, den)


def rat_to_str(q: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def as_fraction(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


@dataclass(frozen=True)
class ComplexRational:
    """Complex number with exact rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", as_fraction(self.re))
        object.__setattr__(self, "im", as_fraction(self.im))

    @staticmethod
    def coerce(value: "ComplexRational | Scalar") -> "ComplexRational":
        if isinstance(value, ComplexRational):
            return value
        return ComplexRational(as_fraction(value), Fraction(0))

    def __add__(self, other):
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return ComplexRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return ComplexRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def reciprocal(self) -> "ComplexRational":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("division by zero")
        return ComplexRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        try:
            o = ComplexRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        return ComplexRational.coerce(other) * self.reciprocal()

    def __eq__(self, other):
        if isinstance(other, ComplexRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def __repr__(self):
        return f"ComplexRational({self.re}, {self.im})"


class Polynomial:
    """Dense polynomial over Q; ``coeffs[i]`` multiplies ``z**i``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c: Scalar, n: int) -> "Polynomial":
        return cls([0] * n + [c])

    @classmethod
    def z(cls) -> "Polynomial":
        return cls((0, 1))

    @staticmethod
    def coerce(value: "Polynomial | Scalar") -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return Polynomial.constant(as_fraction(value))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __add__(self, other):
        try:
            o = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            o = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        if not self or not o:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Polynomial":
        c = as_fraction(c)
        return Polynomial(c * a for a in self.coeffs)

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        other = Polynomial.coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        if len(rem) - 1 < dq:
            return Polynomial(), Polynomial(rem)
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i] / lead
            if c:
                quot[i - dq] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - dq + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if not self:
            return self
        return self.scale(1 / self.leading)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc if self else Fraction(0) * x

    def reversed_coeffs(self, length: int) -> list[Fraction]:
        """Coefficients of ``w**length * p(1/w)`` in ascending powers of w."""
        padded = list(self.coeffs) + [Fraction(0)] * (length + 1 - len(self.coeffs))
        return padded[::-1]


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; ``poly_gcd(0, 0) == 0``."""
    a, b = a.monic(), b.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


class RationalFunction:
    """Quotient ``num/den`` of polynomials, kept coprime with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | Scalar, den: Polynomial | Scalar = 1):
        num, den = Polynomial.coerce(num), Polynomial.coerce(den)
        if not den:
            raise ZeroDivisionError("division by zero")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.leading
        self.num: Polynomial = num.scale(1 / lead)
        self.den: Polynomial = den.scale(1 / lead)

    @classmethod
    def z(cls) -> "RationalFunction":
        return cls(Polynomial.z())

    @staticmethod
    def coerce(value) -> "RationalFunction":
        if isinstance(value, RationalFunction):
            return value
        return RationalFunction(Polynomial.coerce(value))

    def __add__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def reciprocal(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("division by zero")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        try:
            o = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.reciprocal()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return ratfun_equal(self, other)
        try:
            return ratfun_equal(self, RationalFunction.coerce(other))
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RationalFunction(num={self.num!r}, den={self.den!r})"

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise EvaluationAtPole(value=x)
        return self.num(x) / d


def ratfun_equal(f: RationalFunction, g: RationalFunction) -> bool:
    """Exact equality by cross-multiplication."""
    return f.num * g.den == g.num * f.den


def _series_divide(num: Sequence[Fraction], den: Sequence[Fraction], n_terms: int) -> list[Fraction]:
    # power-series quotient num/den in w; den[0] != 0
    inv0 = 1 / den[0]
    out: list[Fraction] = []
    for i in range(n_terms):
        acc = num[i] if i < len(num) else Fraction(0)
        for j in range(1, min(i, len(den) - 1) + 1):
            acc -= den[j] * out[i - j]
        out.append(acc * inv0)
    return out


def ratfun_laurent_at_infinity(f: RationalFunction, order: int) -> list[Fraction]:
    """Laurent coefficients ``c_-1, c_0, ..., c_order`` of ``f`` at infinity.

    ``f(z) = c_-1 z + c_0 + c_1/z + ...``.  The expansion is computed as a
    power series in ``w = 1/z`` after reversing numerator and denominator.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    p, q = f.num.degree, f.den.degree
    if p > q + 1:
        raise NoHerglotzExpansion(value=f"deg num {p} > deg den {q} + 1")
    if not f.num:
        return [Fraction(0)] * (order + 2)
    # f = z**(p-q) * P~(w) / Q~(w); coefficient of z**-j is a_{j+p-q}
    shift = p - q
    n_terms = order + shift + 1
    series = _series_divide(f.num.reversed_coeffs(p), f.den.reversed_coeffs(q), max(n_terms, 0))
    out = []
    for j in range(-1, order + 1):
        i = j + shift
        out.append(series[i] if 0 <= i < len(series) else Fraction(0))
    return out
