"""Exact vs floating-point Hankel determinants on ill-conditioned moments."""

from __future__ import annotations

import math
import time
from decimal import Decimal, localcontext
from fractions import Fraction

from .algebra import rat_to_str
from .generators import Lcg
from .hankel import det_exact, det_float, hankel_matrix, max_order, relative_error
from .moments import DiscreteMeasure, MomentSequence, moments_from_measure

FAMILIES = ("hilbert", "random")


def hilbert_moments(K: int) -> MomentSequence:
    """Moments ``s_k = 1/(k+1)`` of Lebesgue measure on [0, 1]."""
    return MomentSequence(0, 0, tuple(Fraction(1, k + 1) for k in range(2 * K + 1)))


def random_moments(K: int, seed: int = 0) -> MomentSequence:
    """Integer moments of K+1 random integer atoms with masses in 1..3.

    With K+1 atoms every ``Delta_{0,k}``, ``k <= K+1``, is positive.
    """
    rng = Lcg(seed)
    bound = max(3, K)
    pool = list(range(-bound, bound + 1))
    atoms = []
    for _ in range(K + 1):
        atoms.append(pool.pop(rng.randint(0, len(pool) - 1)))
    mu = DiscreteMeasure(tuple((lam, rng.randint(1, 3)) for lam in sorted(atoms)))
    return moments_from_measure(mu, K)


def _finite_or_str(x: float):
    return x if math.isfinite(x) else "inf"


def decimal_string(q: Fraction, digits: int = 17) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        value = Decimal(q.numerator) / Decimal(q.denominator)
    return f"{value:.{digits - 1}E}"


def bench_conditioning(K: int, family: str = "hilbert", seed: int = 0) -> dict:
    """Table of ``Delta_{0,k}`` exact vs double precision for ``k = 0..K+1``."""
    if K < 1:
        raise ValueError("K must be at least 1")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    ms = hilbert_moments(K) if family == "hilbert" else random_moments(K, seed)

    rows = []
    exact_time = float_time = 0.0
    for k in range(max_order(0, K) + 1):
        mat = hankel_matrix(ms, 0, k)
        t0 = time.perf_counter()
        exact, swaps = det_exact(mat)
        t1 = time.perf_counter()
        approx = det_float([[float(x) for x in row] for row in mat], swaps)
        t2 = time.perf_counter()
        exact_time += t1 - t0
        float_time += t2 - t1
        rows.append(
            {
                "k": k,
                "exact": rat_to_str(exact),
                "exact_decimal": decimal_string(exact),
                "float": approx,
                "rel_error": _finite_or_str(relative_error(approx, exact)),
            }
        )
    return {
        "family": family,
        "K": K,
        "rows": rows,
        "seconds": {"exact": exact_time, "float": float_time},
    }
