"""Hankel determinant ladders and the kappa index.

For ``i`` in ``{-2, -1, 0, 1, 2}`` the determinant ``Delta_{i,k}`` is the
``k x k`` determinant of ``[s_{i+a+b}]``, with ``Delta_{i,0} = 1``.  Every
entry is computed independently by fraction-free (Bareiss) elimination; the
three Sylvester relations between neighbouring families are kept purely as a
check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InconsistentMomentData
from .moments import MomentSequence

FAMILIES = (-2, -1, 0, 1, 2)

# relation id -> (a, b, c): Delta_{a,k} Delta_{b,k} - Delta_{a,k-1} Delta_{b,k+1} = Delta_{c,k}**2
SYLVESTER_RELATIONS = {
    "one_minus_one": (1, -1, 0),
    "two_zero": (2, 0, 1),
    "zero_minus_two": (0, -2, -1),
}


def bareiss(matrix: Sequence[Sequence[int]]) -> tuple[int, list[tuple[int, int]]]:
    """Determinant of an integer matrix by Bareiss elimination.

    Returns the determinant and the row swaps ``(step, row)`` performed, so a
    floating-point replay can follow the same elimination order.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1, []
    sign = 1
    prev = 1
    swaps: list[tuple[int, int]] = []
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    swaps.append((k, i))
                    break
            else:
                return 0, swaps
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1], swaps


def det_exact(matrix: Sequence[Sequence[Fraction]]) -> tuple[Fraction, list[tuple[int, int]]]:
    """Exact determinant of a rational matrix (denominators cleared first)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1), []
    d = 1
    for row in matrix:
        for x in row:
            d = math.lcm(d, x.denominator)
    ints = [[int(x * d) for x in row] for row in matrix]
    value, swaps = bareiss(ints)
    return Fraction(value, d**n), swaps


def det_float(matrix: Sequence[Sequence[float]], swaps: Sequence[tuple[int, int]] = ()) -> float:
    """Bareiss elimination in binary floating point, replaying ``swaps``."""
    a = [list(map(float, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1.0
    planned = dict(swaps)
    sign = 1.0
    prev = 1.0
    for k in range(n - 1):
        if k in planned:
            i = planned[k]
            a[k], a[i] = a[i], a[k]
            sign = -sign
        pivot = a[k][k]
        if pivot == 0.0:
            return 0.0
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) / prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def max_order(i: int, K: int) -> int:
    """Largest k with ``Delta_{i,k}`` inside ``s_-2 .. s_2K``."""
    return (2 * K - i + 2) // 2


def hankel_matrix(ms: MomentSequence, i: int, k: int) -> list[list[Fraction]]:
    return [[ms[i + a + b] for b in range(k)] for a in range(k)]


@dataclass(frozen=True)
class HankelTable:
    """``delta[i][k] = Delta_{i,k}`` for every determinant the moments support."""

    delta: dict[int, tuple[Fraction, ...]]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, k = key
        if k < 0 or i not in self.delta or k >= len(self.delta[i]):
            raise InconsistentMomentData(
                "inconsistent moment data", value=f"Delta[{i},{k}] needs more moments", stage="expansion"
            )
        return self.delta[i][k]

    def has(self, i: int, k: int) -> bool:
        return i in self.delta and 0 <= k < len(self.delta[i])

    def top(self, i: int) -> int:
        """Largest available k in family i."""
        return len(self.delta[i]) - 1

    @property
    def K(self) -> int:
        return self.top(2)


@dataclass(frozen=True)
class KappaIndex:
    """``kappa[n-1] = kappa(n)``: positions of the non-zero ``Delta_{1,k}``."""

    kappa: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.kappa)

    def __call__(self, n: int) -> int:
        if not 1 <= n <= len(self.kappa):
            raise IndexError(f"kappa({n}) undefined")
        return self.kappa[n - 1]


def hankel_table(ms: MomentSequence) -> HankelTable:
    K = ms.order
    delta = {}
    for i in FAMILIES:
        delta[i] = tuple(det_exact(hankel_matrix(ms, i, k))[0] for k in range(max_order(i, K) + 1))
    return HankelTable(delta)


def sylvester_residuals(t: HankelTable) -> list[tuple[str, int, Fraction]]:
    out = []
    for rid, (a, b, c) in SYLVESTER_RELATIONS.items():
        k = 1
        while t.has(a, k) and t.has(b, k + 1) and t.has(c, k):
            lhs = t[a, k] * t[b, k] - t[a, k - 1] * t[b, k + 1]
            out.append((rid, k, lhs - t[c, k] ** 2))
            k += 1
    return out


def kappa_index(t: HankelTable, upto: int) -> KappaIndex:
    """Indices ``k <= upto`` with ``Delta_{1,k} != 0``, in increasing order."""
    if upto > t.top(1):
        raise InconsistentMomentData(value=f"Delta[1,{upto}] needs more moments")
    kappa = []
    previous_zero = False
    for k in range(upto + 1):
        zero = t[1, k] == 0
        if zero and previous_zero:
            raise InconsistentMomentData(value=f"consecutive zeros Delta[1,{k - 1}] = Delta[1,{k}] = 0")
        if not zero:
            kappa.append(k)
        previous_zero = zero
    return KappaIndex(tuple(kappa))


@dataclass(frozen=True)
class FloatHankelTable:
    delta: dict[int, tuple[float, ...]]
    rel_error: dict[int, tuple[float, ...]]
    exact: HankelTable

    @property
    def max_rel_error(self) -> float:
        return max((e for errs in self.rel_error.values() for e in errs), default=0.0)


def relative_error(approx: float, exact: Fraction) -> float:
    """``|approx - exact| / |exact|``; absolute error when ``exact == 0``."""
    if math.isnan(approx):
        return math.inf
    if math.isinf(approx):
        return math.inf
    diff = abs(Fraction(approx) - exact)
    if exact == 0:
        return float(diff)
    return float(diff / abs(exact))


def hankel_table_float(ms: MomentSequence, precision: str = "double") -> FloatHankelTable:
    """Same determinants in IEEE double, with the exact table as reference."""
    if precision != "double":
        raise ValueError(f"unsupported precision {precision!r}")
    K = ms.order
    exact: dict[int, tuple[Fraction, ...]] = {}
    approx: dict[int, tuple[float, ...]] = {}
    errors: dict[int, tuple[float, ...]] = {}
    for i in FAMILIES:
        ex, fl, er = [], [], []
        for k in range(max_order(i, K) + 1):
            mat = hankel_matrix(ms, i, k)
            value, swaps = det_exact(mat)
            f = det_float([[float(x) for x in row] for row in mat], swaps)
            ex.append(value)
            fl.append(f)
            er.append(relative_error(f, value))
        exact[i], approx[i], errors[i] = tuple(ex), tuple(fl), tuple(er)
    return FloatHankelTable(approx, errors, HankelTable(exact))
