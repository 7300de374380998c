"""Spectral data and moment sequences.

A :class:`DiscreteMeasure` holds rational point masses together with the
slope ``b`` and the constant ``s_minus1``; the associated Weyl-Titchmarsh
function is

    m(z) = b z - s_minus1 + sum_j mass_j / (lambda_j - z),

whose expansion at infinity is ``-m(z) = s_-2 z + s_-1 + sum_k s_k / z**(k+1)``
with ``s_-2 = -b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Polynomial, RationalFunction, Scalar, as_fraction, ratfun_laurent_at_infinity
from .errors import InconsistentMomentData, InvalidMeasure


@dataclass(frozen=True)
class DiscreteMeasure:
    """Finite positive measure with rational atoms, plus ``b >= 0`` and ``s_minus1``."""

    points: tuple[tuple[Fraction, Fraction], ...] = ()
    b: Fraction = Fraction(0)
    s_minus1: Fraction = Fraction(0)

    def __post_init__(self):
        pts = tuple((as_fraction(lam), as_fraction(mass)) for lam, mass in self.points)
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "b", as_fraction(self.b))
        object.__setattr__(self, "s_minus1", as_fraction(self.s_minus1))
        lambdas = [lam for lam, _ in pts]
        if len(set(lambdas)) != len(lambdas):
            raise InvalidMeasure("invalid measure", value="duplicate lambda")
        for lam, mass in pts:
            if mass <= 0:
                raise InvalidMeasure("invalid measure", value=f"mass {mass} at lambda {lam}")
        if self.b < 0:
            raise InvalidMeasure("invalid measure", value=f"b = {self.b}")

    @property
    def D(self) -> int:
        """Number of poles of the Weyl-Titchmarsh function."""
        return len(self.points)

    def mass_at(self, lam: Scalar) -> Fraction:
        lam = as_fraction(lam)
        for p, mass in self.points:
            if p == lam:
                return mass
        return Fraction(0)

    @property
    def has_zero(self) -> bool:
        return any(lam == 0 for lam, _ in self.points)


@dataclass(frozen=True)
class MomentSequence:
    """``s_-2, s_-1`` and ``s_0 ... s_2K``."""

    s_minus2: Fraction
    s_minus1: Fraction
    s: tuple[Fraction, ...] = field(default=(Fraction(0),))

    def __post_init__(self):
        object.__setattr__(self, "s_minus2", as_fraction(self.s_minus2))
        object.__setattr__(self, "s_minus1", as_fraction(self.s_minus1))
        object.__setattr__(self, "s", tuple(as_fraction(v) for v in self.s))
        if len(self.s) % 2 != 1:
            raise InconsistentMomentData(value=f"need an odd number of moments s_0..s_2K, got {len(self.s)}", stage="moments")
        if self.s_minus2 > 0:
            raise InconsistentMomentData(value=f"s_minus2 = {self.s_minus2} > 0", stage="moments")

    @property
    def order(self) -> int:
        """K, where the last available moment is ``s_2K``."""
        return (len(self.s) - 1) // 2

    def __getitem__(self, j: int) -> Fraction:
        """Moment ``s_j`` for ``j >= -2`` (negative indices mean s_-2, s_-1)."""
        if j == -2:
            return self.s_minus2
        if j == -1:
            return self.s_minus1
        if j < -2:
            raise IndexError(j)
        return self.s[j]


def moments_from_measure(mu: DiscreteMeasure, K: int) -> MomentSequence:
    if K < 0:
        raise ValueError("K must be non-negative")
    s = []
    powers = [Fraction(1)] * len(mu.points)
    for _ in range(2 * K + 1):
        s.append(sum((mass * pw for (_, mass), pw in zip(mu.points, powers)), Fraction(0)))
        powers = [pw * lam for (lam, _), pw in zip(mu.points, powers)]
    return MomentSequence(-mu.b, mu.s_minus1, tuple(s))


def moments_from_rational(m: RationalFunction, K: int) -> MomentSequence:
    """Read ``s_-2 .. s_2K`` off the expansion of ``-m`` at infinity."""
    if K < 0:
        raise ValueError("K must be non-negative")
    c = ratfun_laurent_at_infinity(-m, 2 * K + 1)
    return MomentSequence(c[0], c[1], tuple(c[2:]))


def weyl_from_measure(mu: DiscreteMeasure) -> RationalFunction:
    # common denominator prod_j (lambda_j - z), assembled directly
    factors = [Polynomial((lam, -1)) for lam, _ in mu.points]
    den = Polynomial.constant(1)
    for f in factors:
        den = den * f
    num = Polynomial((-mu.s_minus1, mu.b)) * den
    for j, (_, mass) in enumerate(mu.points):
        term = Polynomial.constant(mass)
        for i, f in enumerate(factors):
            if i != j:
                term = term * f
        num = num + term
    return RationalFunction(num, den)

