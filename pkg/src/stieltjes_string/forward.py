"""Forward direction: from string or continued-fraction data back to ``m``.

The Weyl-Titchmarsh function of a discrete string is assembled bottom-up from
the node recursion

    f_n(z) = upsilon_n z + omega_n + 1 / (-(x_{n+1} - x_n) z + 1 / f_{n+1}(z)),

starting from ``f_N(z) = upsilon_N z + omega_N - r/z`` with ``r = 1/(L - x_N)``
(``r = 0`` for infinite length).  The round trips below compose the inverse
pipeline with this map and compare canonical rational functions exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .algebra import ComplexRational, Polynomial, RationalFunction
from .errors import EvaluationAtPole, InvalidString
from .expansion import (
    INFINITE,
    ContinuedFraction,
    StringData,
    analyze,
    check_coefficient_laws,
    contfrac_from_expansion,
    cumulative_identities,
    string_from_expansion,
)
from .hankel import sylvester_residuals
from .moments import DiscreteMeasure, moments_from_measure, moments_from_rational, weyl_from_measure


def validate_string(sd: StringData) -> None:
    if not sd.terminated:
        raise InvalidString(value="open truncation has no Weyl-Titchmarsh function")
    N = sd.N
    if len(sd.omega) != N + 1 or len(sd.upsilon) != N + 1:
        raise InvalidString(value=f"need {N + 1} omega and upsilon weights for {N} points")
    prev = Fraction(0)
    for n, x in enumerate(sd.x, start=1):
        if not x > prev:
            raise InvalidString(value=f"x_{n} = {x} is not greater than {prev}")
        prev = x
    if sd.L != INFINITE and not sd.L > prev:
        raise InvalidString(value=f"L = {sd.L} is not greater than x_N = {prev}")
    for n, u in enumerate(sd.upsilon):
        if u < 0:
            raise InvalidString(value=f"upsilon_{n} = {u} < 0")
    for n in range(1, N + 1):
        if sd.upsilon[n] == 0 and sd.omega[n] == 0:
            raise InvalidString(value=f"upsilon_{n} = omega_{n} = 0")


def string_to_contfrac(sd: StringData) -> ContinuedFraction:
    validate_string(sd)
    points = (Fraction(0),) + sd.x
    l = tuple(b - a for a, b in zip(points, points[1:]))
    r = Fraction(0) if sd.L == INFINITE else 1 / (sd.L - points[-1])
    return ContinuedFraction(sd.upsilon, sd.omega, l, r)


def contfrac_to_string(cf: ContinuedFraction) -> StringData:
    x, acc = [], Fraction(0)
    for step in cf.l:
        acc += step
        x.append(acc)
    if cf.r is None:
        L = None
    else:
        L = INFINITE if cf.r == 0 else acc + 1 / cf.r
    return StringData(L, tuple(x), cf.omega, cf.upsilon, cf.boundary_upsilon)


def weyl_from_contfrac(cf: ContinuedFraction) -> RationalFunction:
    if not cf.terminated:
        raise InvalidString(value="open truncation has no Weyl-Titchmarsh function")
    N = cf.N
    z = RationalFunction.z()
    f = RationalFunction(Polynomial((-cf.r, cf.omega[N], cf.upsilon[N])), Polynomial.z())
    for n in range(N - 1, -1, -1):
        if not f:
            raise InvalidString(value=f"node {n + 1} function vanishes identically")
        f = cf.upsilon[n] * z + cf.omega[n] + 1 / (-cf.l[n] * z + 1 / f)
    return f


def weyl_from_string(sd: StringData) -> RationalFunction:
    return weyl_from_contfrac(string_to_contfrac(sd))


def eval_contfrac(cf: ContinuedFraction, z: ComplexRational | Fraction | int) -> ComplexRational:
    """Evaluate the terminated continued fraction at ``z`` exactly, bottom-up."""
    if not cf.terminated:
        raise InvalidString(value="open truncation cannot be evaluated")
    z = ComplexRational.coerce(z)
    N = cf.N
    try:
        f = cf.upsilon[N] * z + cf.omega[N]
        if cf.r:
            f = f - cf.r / z
        for n in range(N - 1, -1, -1):
            f = cf.upsilon[n] * z + cf.omega[n] + 1 / (-cf.l[n] * z + 1 / f)
    except ZeroDivisionError:
        raise EvaluationAtPole(value=z) from None
    return f


@dataclass
class RoundTripReport:
    passed: bool
    stage: str
    residuals: list[tuple[str, int, Fraction]] = field(default_factory=list)
    lhs: Any = None
    rhs: Any = None
    order: Optional[int] = None
    detail: Optional[str] = None


def _nonzero(residuals):
    return [r for r in residuals if r[2] != 0]


def roundtrip_measure(mu: DiscreteMeasure, K: int | None = None) -> RoundTripReport:
    """mu -> moments -> Hankel table -> string -> m, compared with m built from mu.

    ``K`` defaults to the number of atoms and is raised (up to ``D + 2``)
    until the moments witness ``Delta_{0,K+1} = 0``.
    """
    D = mu.D
    K = D if K is None else K
    while True:
        ms = moments_from_measure(mu, K)
        ex = analyze(ms)
        if ex.terminated or K >= D + 2:
            break
        K += 1
    if not ex.terminated:
        return RoundTripReport(False, "hankel", order=K, detail="rank exhaustion not witnessed")
    residuals = sylvester_residuals(ex.table)
    cf = contfrac_from_expansion(ex)
    sd = string_from_expansion(ex)
    check_coefficient_laws(cf, ex.table, ex.kappa)
    residuals += cumulative_identities(sd, ex.table, ex.kappa)
    if _nonzero(residuals):
        return RoundTripReport(False, "laws", residuals, order=K)
    lhs = weyl_from_string(sd)
    rhs = weyl_from_measure(mu)
    ok = lhs == rhs
    return RoundTripReport(ok, "compare", residuals, lhs, rhs, order=K)


def roundtrip_string(sd: StringData) -> RoundTripReport:
    """sd -> m -> moments -> string; checks exact equality of every field."""
    m = weyl_from_string(sd)
    K = m.den.degree  # number of poles; enough to exhaust the rank
    ms = moments_from_rational(m, K)
    ex = analyze(ms)
    if not ex.terminated:
        return RoundTripReport(False, "hankel", lhs=sd, order=K, detail="rank exhaustion not witnessed")
    back = string_from_expansion(ex)
    residuals = sylvester_residuals(ex.table) + cumulative_identities(back, ex.table, ex.kappa)
    same = (back.L, back.x, back.omega, back.upsilon) == (sd.L, sd.x, sd.omega, sd.upsilon)
    return RoundTripReport(same and not _nonzero(residuals), "compare", residuals, sd, back, order=K)
