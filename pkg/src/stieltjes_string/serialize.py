"""JSON (de)serialization.

Rationals are always strings ``"p/q"`` (or ``"p"``), never JSON numbers;
infinite string length is the literal ``"inf"``.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .algebra import ComplexRational, Polynomial, RationalFunction, rat_to_str
from .expansion import INFINITE, ContinuedFraction, StringData
from .forward import RoundTripReport
from .hankel import FAMILIES, HankelTable
from .moments import DiscreteMeasure, MomentSequence


class SchemaError(ValueError):
    """Input JSON does not match the expected schema."""


_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def rat_from_str(text: Any) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL.match(text.strip()):
        raise SchemaError(f"expected a rational string 'p/q', got {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise SchemaError(f"zero denominator in {text!r}") from None


def _rats(values) -> list[str]:
    return [rat_to_str(v) for v in values]


def _parse_rats(values, what: str) -> tuple[Fraction, ...]:
    if not isinstance(values, list):
        raise SchemaError(f"{what} must be a list")
    return tuple(rat_from_str(v) for v in values)


def _opt(value):
    return None if value is None else rat_to_str(value)


def _field(obj, key, what):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{what} is missing field {key!r}")
    return obj[key]


def complex_to_json(c: ComplexRational) -> dict:
    return {"re": rat_to_str(c.re), "im": rat_to_str(c.im)}


def complex_from_json(obj) -> ComplexRational:
    return ComplexRational(rat_from_str(_field(obj, "re", "complex")), rat_from_str(_field(obj, "im", "complex")))


def measure_to_json(mu: DiscreteMeasure) -> dict:
    return {
        "b": rat_to_str(mu.b),
        "s_minus1": rat_to_str(mu.s_minus1),
        "points": [{"lambda": rat_to_str(lam), "mass": rat_to_str(mass)} for lam, mass in mu.points],
    }


def measure_from_json(obj) -> DiscreteMeasure:
    points = _field(obj, "points", "measure")
    if not isinstance(points, list):
        raise SchemaError("measure points must be a list")
    pts = tuple(
        (rat_from_str(_field(p, "lambda", "point")), rat_from_str(_field(p, "mass", "point"))) for p in points
    )
    return DiscreteMeasure(pts, rat_from_str(obj.get("b", "0")), rat_from_str(obj.get("s_minus1", "0")))


def moments_to_json(ms: MomentSequence) -> dict:
    return {"s_minus2": rat_to_str(ms.s_minus2), "s_minus1": rat_to_str(ms.s_minus1), "s": _rats(ms.s)}


def moments_from_json(obj) -> MomentSequence:
    return MomentSequence(
        rat_from_str(_field(obj, "s_minus2", "moments")),
        rat_from_str(_field(obj, "s_minus1", "moments")),
        _parse_rats(_field(obj, "s", "moments"), "moments s"),
    )


def table_to_json(t: HankelTable) -> dict:
    return {"delta": {str(i): _rats(t.delta[i]) for i in FAMILIES}}


def table_from_json(obj) -> HankelTable:
    delta = _field(obj, "delta", "table")
    return HankelTable({i: _parse_rats(_field(delta, str(i), "delta"), f"delta {i}") for i in FAMILIES})


def contfrac_to_json(cf: ContinuedFraction) -> dict:
    return {
        "upsilon": _rats(cf.upsilon),
        "omega": _rats(cf.omega),
        "l": _rats(cf.l),
        "r": _opt(cf.r),
        "terminated": cf.terminated,
        "boundary_upsilon": _opt(cf.boundary_upsilon),
    }


def contfrac_from_json(obj) -> ContinuedFraction:
    r = _field(obj, "r", "continued fraction")
    bu = obj.get("boundary_upsilon")
    return ContinuedFraction(
        _parse_rats(_field(obj, "upsilon", "continued fraction"), "upsilon"),
        _parse_rats(_field(obj, "omega", "continued fraction"), "omega"),
        _parse_rats(_field(obj, "l", "continued fraction"), "l"),
        None if r is None else rat_from_str(r),
        None if bu is None else rat_from_str(bu),
    )


def string_to_json(sd: StringData) -> dict:
    if sd.L is None:
        L = None
    elif sd.L == INFINITE:
        L = "inf"
    else:
        L = rat_to_str(sd.L)
    return {
        "L": L,
        "x": _rats(sd.x),
        "omega": _rats(sd.omega),
        "upsilon": _rats(sd.upsilon),
        "boundary_upsilon": _opt(sd.boundary_upsilon),
    }


def string_from_json(obj) -> StringData:
    raw_L = _field(obj, "L", "string")
    if raw_L is None:
        L = None
    elif raw_L == "inf":
        L = INFINITE
    else:
        L = rat_from_str(raw_L)
    bu = obj.get("boundary_upsilon")
    return StringData(
        L,
        _parse_rats(_field(obj, "x", "string"), "x"),
        _parse_rats(_field(obj, "omega", "string"), "omega"),
        _parse_rats(_field(obj, "upsilon", "string"), "upsilon"),
        None if bu is None else rat_from_str(bu),
    )


def ratfun_to_json(f: RationalFunction) -> dict:
    return {"num": _rats(f.num.coeffs), "den": _rats(f.den.coeffs)}


def ratfun_from_json(obj) -> RationalFunction:
    return RationalFunction(
        Polynomial(_parse_rats(_field(obj, "num", "rational function"), "num")),
        Polynomial(_parse_rats(_field(obj, "den", "rational function"), "den")),
    )


def _side_to_json(value):
    if isinstance(value, RationalFunction):
        return ratfun_to_json(value)
    if isinstance(value, StringData):
        return string_to_json(value)
    return value


def report_to_json(rep: RoundTripReport) -> dict:
    return {
        "pass": rep.passed,
        "stage": rep.stage,
        "order": rep.order,
        "residuals": [[rid, k, rat_to_str(v)] for rid, k, v in rep.residuals],
        "lhs": _side_to_json(rep.lhs),
        "rhs": _side_to_json(rep.rhs),
        "detail": rep.detail,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
