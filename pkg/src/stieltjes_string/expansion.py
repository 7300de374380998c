"""Continued-fraction coefficients and string data from Hankel determinants.

Given the moments of ``m``, the expansion

    m(z) = u_0 z + w_0 + 1/(-l_1 z + 1/(u_1 z + w_1 + ... + 1/(-l_N z + 1/(u_N z + w_N - r/z))))

is read off the determinant ladders (``u`` = upsilon, ``w`` = omega).  When
the moments witness a rank drop of ``Delta_{0,.}`` the function is rational
and the terminated form (with ``r``) is produced; otherwise the result is the
prefix that the available moments determine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InconsistentMomentData, InternalInconsistency, RatioUndefined
from .hankel import HankelTable, KappaIndex, hankel_table, kappa_index
from .moments import MomentSequence

INFINITE = math.inf

Length = Union[Fraction, float]


@dataclass(frozen=True)
class ContinuedFraction:
    """Coefficients of the expansion.

    ``upsilon`` and ``omega`` run over ``0..N`` in the terminated case and
    ``0..N-1`` otherwise; ``l`` over ``1..N``.  ``r`` is ``None`` for an open
    truncation, and ``boundary_upsilon`` carries the limit slope of the
    remainder when the last available ``Delta_{1,K}`` vanishes.
    """

    upsilon: tuple[Fraction, ...]
    omega: tuple[Fraction, ...]
    l: tuple[Fraction, ...]
    r: Optional[Fraction]
    boundary_upsilon: Optional[Fraction] = None

    @property
    def N(self) -> int:
        return len(self.l)

    @property
    def terminated(self) -> bool:
        return self.r is not None


@dataclass(frozen=True)
class StringData:
    """Discrete generalized indefinite string.

    ``x`` are the interior points ``x_1 < ... < x_N``; ``omega[n]`` and
    ``upsilon[n]`` are the weights at ``x_n`` (``x_0 = 0``).  ``L`` is a
    Fraction, :data:`INFINITE`, or ``None`` for an open truncation where the
    length is not determined.
    """

    L: Optional[Length]
    x: tuple[Fraction, ...]
    omega: tuple[Fraction, ...]
    upsilon: tuple[Fraction, ...]
    boundary_upsilon: Optional[Fraction] = None

    @property
    def N(self) -> int:
        return len(self.x)

    @property
    def terminated(self) -> bool:
        return self.L is not None

    @property
    def cumulative_w(self) -> tuple[Fraction, ...]:
        """Value of the normalized anti-derivative of omega on ``(x_j, x_{j+1})``."""
        out, acc = [], Fraction(0)
        for w in self.omega:
            acc += w
            out.append(acc)
        return tuple(out)


@dataclass(frozen=True)
class Expansion:
    """Classification of a moment sequence ahead of coefficient extraction."""

    table: HankelTable
    kappa: KappaIndex
    terminated: bool
    D: Optional[int]

    @property
    def N(self) -> int:
        return self.kappa.count - 1 if self.terminated else self.kappa.count


def _ratio(num: Fraction, den: Fraction, what: str) -> Fraction:
    if den == 0:
        raise InconsistentMomentData(value=f"zero denominator in {what}", stage="expansion")
    return num / den


def analyze(ms: MomentSequence, table: HankelTable | None = None) -> Expansion:
    """Decide terminated vs open and build the kappa index."""
    t = table if table is not None else hankel_table(ms)
    K = ms.order
    d0 = t.delta[0]
    for k, v in enumerate(d0):
        if v < 0:
            raise InconsistentMomentData(value=f"Delta[0,{k}] = {v} < 0")
    zeros = [k for k, v in enumerate(d0) if v == 0]
    if not zeros:
        return Expansion(t, kappa_index(t, K), False, None)
    D = zeros[0] - 1
    for k in range(D + 1, len(d0)):
        if d0[k] != 0:
            raise InconsistentMomentData(value=f"Delta[0,{k}] = {d0[k]} after rank drop at {D + 1}")
    for k in range(D + 1, t.top(1) + 1):
        if t[1, k] != 0:
            raise InconsistentMomentData(value=f"Delta[1,{k}] = {t[1, k]} beyond rank {D}")
    return Expansion(t, kappa_index(t, D), True, D)


def _weights(ex: Expansion) -> tuple[list[Fraction], list[Fraction]]:
    t, kap = ex.table, ex.kappa
    upsilon = [-_ratio(t[-2, 1], t[0, 0], "upsilon_0")]
    omega = [-_ratio(t[-1, 1], t[1, 0], "omega_0")]
    last = ex.N if ex.terminated else ex.N - 1
    for n in range(1, last + 1):
        k, k_next = kap(n), kap(n + 1)
        upsilon.append(
            _ratio(t[-2, k + 2], t[0, k + 1], f"upsilon_{n}") - _ratio(t[-2, k_next + 1], t[0, k_next], f"upsilon_{n}")
        )
        omega.append(
            _ratio(t[-1, k + 1], t[1, k], f"omega_{n}") - _ratio(t[-1, k_next + 1], t[1, k_next], f"omega_{n}")
        )
    return upsilon, omega


def _boundary_upsilon(ex: Expansion) -> Optional[Fraction]:
    t = ex.table
    K = t.K
    if ex.terminated or K == 0 or t[1, K] != 0:
        return None
    k = ex.kappa(ex.N)
    return _ratio(t[-1, k + 2] ** 2, t[0, k + 1] * t[0, k + 2], "boundary upsilon")


def _check_signs(upsilon, omega, l, r, interior_upto: int) -> None:
    for n, v in enumerate(l, start=1):
        if v <= 0:
            raise InconsistentMomentData(value=f"l_{n} = {v} <= 0", stage="expansion")
    for n, v in enumerate(upsilon):
        if v < 0:
            raise InconsistentMomentData(value=f"upsilon_{n} = {v} < 0", stage="expansion")
    for n in range(1, interior_upto + 1):
        if upsilon[n] == 0 and omega[n] == 0:
            raise InconsistentMomentData(value=f"upsilon_{n} = omega_{n} = 0", stage="expansion")
    if r is not None and r < 0:
        raise InconsistentMomentData(value=f"r = {r} < 0", stage="expansion")


def contfrac_from_expansion(ex: Expansion) -> ContinuedFraction:
    t, kap = ex.table, ex.kappa
    upsilon, omega = _weights(ex)
    l = []
    for n in range(1, ex.N + 1):
        k = kap(n)
        l.append(_ratio(t[1, k] ** 2, t[0, k] * t[0, k + 1], f"l_{n}"))
    r = None
    if ex.terminated:
        k = kap(ex.N + 1)
        r = _ratio(t[0, k] * t[0, k + 1], t[1, k] ** 2, "r")
    _check_signs(upsilon, omega, l, r, ex.N if ex.terminated else ex.N - 1)
    return ContinuedFraction(tuple(upsilon), tuple(omega), tuple(l), r, _boundary_upsilon(ex))


def string_from_expansion(ex: Expansion) -> StringData:
    t, kap = ex.table, ex.kappa
    upsilon, omega = _weights(ex)
    x = []
    for n in range(1, ex.N + 1):
        k = kap(n)
        x.append(_ratio(t[2, k], t[0, k + 1], f"x_{n}"))
    L: Optional[Length] = None
    if ex.terminated:
        k = kap(ex.N + 1)
        inv_L = _ratio(t[0, k + 1], t[2, k], "1/L")
        L = INFINITE if inv_L == 0 else 1 / inv_L
    for a, b in zip([Fraction(0)] + x, x):
        if not a < b:
            raise InconsistentMomentData(value=f"points not increasing: {a} >= {b}", stage="expansion")
    if L is not None and L != INFINITE and x and not x[-1] < L:
        raise InconsistentMomentData(value=f"x_N = {x[-1]} >= L = {L}", stage="expansion")
    _check_signs(upsilon, omega, [], None, ex.N if ex.terminated else ex.N - 1)
    return StringData(L, tuple(x), tuple(omega), tuple(upsilon), _boundary_upsilon(ex))


def contfrac_from_moments(ms: MomentSequence) -> ContinuedFraction:
    return contfrac_from_expansion(analyze(ms))


def string_from_moments(ms: MomentSequence) -> StringData:
    return string_from_expansion(analyze(ms))


@dataclass
class LawReport:
    checked: list[str]

    @property
    def count(self) -> int:
        return len(self.checked)


def check_coefficient_laws(cf: ContinuedFraction, t: HankelTable, k: KappaIndex) -> LawReport:
    """Re-derive the coefficients through the alternate determinant formulas.

    Raises :class:`InternalInconsistency` on the first violated law.
    """
    checked: list[str] = []

    def require(ok: bool, law: str, detail=None):
        if not ok:
            raise InternalInconsistency(law, detail)
        checked.append(law)

    N = cf.N
    # k(n + 1) exists for n <= N when terminated, n <= N - 1 otherwise
    has_next = (lambda n: n + 1 <= k.count)
    interior = N if cf.terminated else N - 1

    if N >= 1:
        require(cf.l[0] == t[2, 0] / t[0, 1], "l_1 = Delta[2,0]/Delta[0,1]", cf.l[0])
    for n in range(2, N + 1):
        if has_next(n):
            alt = t[2, k(n + 1) - 1] / t[0, k(n + 1)] - t[2, k(n) - 1] / t[0, k(n)]
        else:
            alt = t[2, k(n)] / t[0, k(n) + 1] - t[2, k(n) - 1] / t[0, k(n)]
        require(cf.l[n - 1] == alt, f"l_{n} telescoped", (cf.l[n - 1], alt))

    for n in range(1, interior + 1):
        gap = t[1, k(n) + 1] == 0
        require((cf.upsilon[n] != 0) == gap, f"upsilon_{n} != 0 iff gap", (cf.upsilon[n], gap))
        require(cf.upsilon[n] + abs(cf.omega[n]) > 0, f"upsilon_{n} + |omega_{n}| > 0")
        if gap:
            alt = t[-1, k(n) + 2] ** 2 / (t[0, k(n) + 1] * t[0, k(n) + 2])
            require(cf.upsilon[n] == alt, f"upsilon_{n} squared form", (cf.upsilon[n], alt))
        else:
            alt = t[0, k(n + 1)] ** 2 / (t[1, k(n)] * t[1, k(n + 1)])
            require(cf.omega[n] == alt, f"omega_{n} squared form", (cf.omega[n], alt))

    for n, v in enumerate(cf.l, start=1):
        require(v > 0, f"l_{n} > 0", v)
    for n, v in enumerate(cf.upsilon):
        require(v >= 0, f"upsilon_{n} >= 0", v)
    if cf.r is not None:
        require(cf.r >= 0, "r >= 0", cf.r)
    return LawReport(checked)


def cumulative_identities(sd: StringData, t: HankelTable, k: KappaIndex) -> list[tuple[str, int, Fraction]]:
    """Residuals of the running-sum identities for ``n = 1..N``.

    The first compares ``sum_{j<n} omega_j`` with ``-Delta_{-1,k(n)+1}/Delta_{1,k(n)}``;
    the second adds the integral of the squared anti-derivative of omega
    over ``[0, x_n]`` (a finite sum over segments) to ``sum_{j<n} upsilon_j``
    and compares with ``-Delta_{-2,k(n)+2}/Delta_{0,k(n)+1}``.
    """
    out = []
    cum = sd.cumulative_w
    points = (Fraction(0),) + sd.x
    integral = Fraction(0)
    upsilon_sum = Fraction(0)
    for n in range(1, sd.N + 1):
        integral += cum[n - 1] ** 2 * (points[n] - points[n - 1])
        upsilon_sum += sd.upsilon[n - 1]
        kn = k(n)
        out.append(("omega_sum", n, cum[n - 1] + t[-1, kn + 1] / t[1, kn]))
        out.append(("w_squared_plus_upsilon", n, integral + upsilon_sum + t[-2, kn + 2] / t[0, kn + 1]))
    return out


def rho_zero_ratio(t: HankelTable, k: int) -> Fraction:
    """``Delta_{0,k+1} / Delta_{2,k}``, the finite-rank estimate of the mass at zero."""
    if not (t.has(0, k + 1) and t.has(2, k)):
        raise RatioUndefined(value=f"k = {k} outside the table")
    if t[2, k] == 0:
        raise RatioUndefined(value=f"Delta[2,{k}] = 0")
    return t[0, k + 1] / t[2, k]
