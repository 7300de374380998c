import math
from fractions import Fraction

import pytest

from stieltjes_string.bench import bench_conditioning, decimal_string, hilbert_moments, random_moments
from stieltjes_string.hankel import hankel_table


def test_hilbert_rows():
    out = bench_conditioning(4)
    rows = out["rows"]
    assert [r["k"] for r in rows] == list(range(6))
    assert rows[3]["exact"] == "1/2160"
    assert rows[1]["exact"] == "1" and rows[1]["rel_error"] == 0.0
    assert rows[3]["exact_decimal"] == "4.6296296296296296E-4"
    assert out["family"] == "hilbert" and out["K"] == 4


def test_float_error_grows():
    rows = bench_conditioning(12)["rows"]
    assert rows[12]["rel_error"] > rows[4]["rel_error"]


def test_random_family_is_exactly_representable():
    rows = bench_conditioning(5, "random", seed=3)["rows"]
    assert all(r["rel_error"] == 0.0 for r in rows)
    assert all(int(r["exact"]) > 0 for r in rows)


@pytest.mark.parametrize("seed", range(5))
def test_random_moments_have_positive_determinants(seed):
    t = hankel_table(random_moments(4, seed))
    # K+1 atoms: no rank drop within the window
    assert all(d > 0 for d in t.delta[0])


def test_hilbert_moments():
    ms = hilbert_moments(2)
    assert ms.s == tuple(1 / Fraction(k + 1) for k in range(5))


def test_argument_checks():
    with pytest.raises(ValueError):
        bench_conditioning(0)
    with pytest.raises(ValueError):
        bench_conditioning(3, "gaussian")


def test_decimal_string():
    assert decimal_string(Fraction(1, 3)) == "3.3333333333333333E-1"
    assert math.isfinite(float(decimal_string(Fraction(10**40, 7))))
