"""Reproducible random instances.

All randomness comes from :class:`Lcg`, a plain 64-bit linear congruential
generator, so that a port in another language regenerates byte-identical
corpora:

    state_0     = seed mod 2**64
    state_{i+1} = (6364136223846793005 * state_i + 1442695040888963407) mod 2**64
    output_i    = state_{i+1} >> 32                  (32-bit word)
    randint(lo, hi) = lo + (output * (hi - lo + 1)) >> 32
"""

from __future__ import annotations

from fractions import Fraction

from .expansion import INFINITE, StringData
from .moments import DiscreteMeasure

_MASK = (1 << 64) - 1
_A = 6364136223846793005
_C = 1442695040888963407

SUPPORTS = ("real", "positive", "with_zero", "integer")


class Lcg:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u32(self) -> int:
        self.state = (_A * self.state + _C) & _MASK
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``[lo, hi]`` by multiply-shift."""
        span = hi - lo + 1
        return lo + ((self.next_u32() * span) >> 32)

    def chance(self, numerator: int, denominator: int) -> bool:
        return self.randint(1, denominator) <= numerator

    def rational(self, bound: int, lo: int | None = None) -> Fraction:
        """``p/q`` with ``p`` in ``[lo, bound]`` (default ``-bound``) and ``q`` in ``[1, bound]``."""
        lo = -bound if lo is None else lo
        p = self.randint(lo, bound)
        q = self.randint(1, bound)
        return Fraction(p, q)

    def positive(self, bound: int) -> Fraction:
        return self.rational(bound, lo=1)


def gen_random_measure(seed: int, max_points: int, bound: int, support: str = "real") -> DiscreteMeasure:
    """Random valid measure with at most ``max_points`` atoms.

    ``support`` selects where the atoms live: anywhere on the real line,
    strictly positive, always including 0, or on the integers ``[-bound, bound]``
    with integer masses (for exactly representable moments).
    """
    if support not in SUPPORTS:
        raise ValueError(f"unknown support {support!r}")
    if max_points < 0 or bound < 1:
        raise ValueError("need max_points >= 0 and bound >= 1")
    rng = Lcg(seed)
    lowest = 1 if support == "with_zero" else 0
    n = rng.randint(min(lowest, max_points), max_points)
    lambdas: list[Fraction] = [Fraction(0)] if support == "with_zero" and n else []
    attempts = 0
    while len(lambdas) < n and attempts < 50 * (n + 1):
        attempts += 1
        if support == "positive":
            lam = rng.positive(bound)
        elif support == "integer":
            lam = Fraction(rng.randint(-bound, bound))
        else:
            lam = rng.rational(bound)
        if lam not in lambdas:
            lambdas.append(lam)
    if support == "integer":
        masses = [Fraction(rng.randint(1, bound)) for _ in lambdas]
        b = Fraction(rng.randint(0, bound)) if rng.chance(1, 2) else Fraction(0)
        s_minus1 = Fraction(rng.randint(-bound, bound))
    else:
        masses = [rng.positive(bound) for _ in lambdas]
        b = rng.positive(bound) if rng.chance(1, 2) else Fraction(0)
        s_minus1 = rng.rational(bound)
    return DiscreteMeasure(tuple(zip(lambdas, masses)), b, s_minus1)


def gen_random_string(seed: int, max_n: int, bound: int) -> StringData:
    """Random terminated string with at most ``max_n`` interior points."""
    if max_n < 0 or bound < 1:
        raise ValueError("need max_n >= 0 and bound >= 1")
    rng = Lcg(seed)
    N = rng.randint(0, max_n)
    x, acc = [], Fraction(0)
    for _ in range(N):
        acc += rng.positive(bound)
        x.append(acc)
    omega, upsilon = [], []
    for n in range(N + 1):
        w = Fraction(0) if rng.chance(1, 3) else rng.rational(bound)
        u = rng.positive(bound) if rng.chance(1, 2) else Fraction(0)
        if n >= 1 and w == 0 and u == 0:
            u = rng.positive(bound)
        omega.append(w)
        upsilon.append(u)
    L = acc + rng.positive(bound) if rng.chance(1, 2) else INFINITE
    return StringData(L, tuple(x), tuple(omega), tuple(upsilon))
