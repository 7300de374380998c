"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (invalid measure, inconsistent
moments, ...), 2 on I/O or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import serialize as ser
from .bench import FAMILIES as BENCH_FAMILIES
from .bench import bench_conditioning
from .errors import PipelineError
from .expansion import contfrac_from_moments, string_from_moments
from .forward import roundtrip_measure, roundtrip_string, weyl_from_contfrac, weyl_from_string
from .generators import gen_random_measure, gen_random_string
from .hankel import hankel_table
from .moments import MomentSequence, moments_from_measure

COMMANDS = ("expand", "reconstruct", "forward", "roundtrip", "hankel", "bench-conditioning", "gen")
GEN_FAMILIES = ("measure", "string")

DEFAULT_BOUND = 20
DEFAULT_SIZE = 6


@dataclass
class JobSpec:
    command: str
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    order: Optional[int] = None
    seed: Optional[int] = None
    count: Optional[int] = None
    family: Optional[str] = None
    bound: int = DEFAULT_BOUND

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.order is not None and self.order < 0:
            raise ValueError("--order must be >= 0")
        if self.count is not None and self.count < 1:
            raise ValueError("--count must be >= 1")


class UsageError(Exception):
    pass


def _read_json(path: Optional[str]):
    if path is None:
        raise UsageError("--input is required for this command")
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _write(path: Optional[str], payload) -> None:
    text = ser.dumps(payload)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _moments_from_input(obj, order: Optional[int]) -> MomentSequence:
    """Accept either a measure file or a moments file."""
    if isinstance(obj, dict) and "points" in obj:
        mu = ser.measure_from_json(obj)
        return moments_from_measure(mu, mu.D if order is None else order)
    ms = ser.moments_from_json(obj)
    if order is not None and order < ms.order:
        ms = MomentSequence(ms.s_minus2, ms.s_minus1, ms.s[: 2 * order + 1])
    elif order is not None and order > ms.order:
        raise UsageError(f"--order {order} exceeds the {ms.order} available in the moments file")
    return ms


def _roundtrip(job: JobSpec):
    if job.input_path is not None:
        obj = _read_json(job.input_path)
        if isinstance(obj, dict) and "points" in obj:
            rep = roundtrip_measure(ser.measure_from_json(obj), job.order)
        else:
            rep = roundtrip_string(ser.string_from_json(obj))
        body = ser.report_to_json(rep)
        return {"pass": rep.passed, "instances": [body]}
    seed = job.seed or 0
    count = job.count or 1
    size = DEFAULT_SIZE if job.order is None else job.order
    families = GEN_FAMILIES if job.family is None else (job.family,)
    instances = []
    for i in range(count):
        if "measure" in families:
            rep = roundtrip_measure(gen_random_measure(seed + i, size, job.bound))
            instances.append({"index": i, "kind": "measure", **ser.report_to_json(rep)})
        if "string" in families:
            rep = roundtrip_string(gen_random_string(seed + i, size, job.bound))
            instances.append({"index": i, "kind": "string", **ser.report_to_json(rep)})
    return {"pass": all(x["pass"] for x in instances), "instances": instances}


def _gen(job: JobSpec):
    seed = job.seed or 0
    count = job.count or 1
    size = DEFAULT_SIZE if job.order is None else job.order
    family = job.family or "measure"
    if family == "measure":
        items = [ser.measure_to_json(gen_random_measure(seed + i, size, job.bound)) for i in range(count)]
    else:
        items = [ser.string_to_json(gen_random_string(seed + i, size, job.bound)) for i in range(count)]
    return items[0] if job.count is None else items


def execute(job: JobSpec):
    """Run a job and return the JSON payload."""
    cmd = job.command
    if cmd == "expand":
        return ser.contfrac_to_json(contfrac_from_moments(_moments_from_input(_read_json(job.input_path), job.order)))
    if cmd == "reconstruct":
        return ser.string_to_json(string_from_moments(_moments_from_input(_read_json(job.input_path), job.order)))
    if cmd == "hankel":
        return ser.table_to_json(hankel_table(_moments_from_input(_read_json(job.input_path), job.order)))
    if cmd == "forward":
        obj = _read_json(job.input_path)
        if isinstance(obj, dict) and "l" in obj:
            m = weyl_from_contfrac(ser.contfrac_from_json(obj))
        else:
            m = weyl_from_string(ser.string_from_json(obj))
        return ser.ratfun_to_json(m)
    if cmd == "roundtrip":
        return _roundtrip(job)
    if cmd == "bench-conditioning":
        family = job.family or "hilbert"
        if family not in BENCH_FAMILIES:
            raise UsageError(f"unknown --family {family!r} for bench-conditioning")
        return bench_conditioning(12 if job.order is None else job.order, family, job.seed or 0)
    if cmd == "gen":
        if job.family is not None and job.family not in GEN_FAMILIES:
            raise UsageError(f"unknown --family {job.family!r} for gen")
        return _gen(job)
    raise UsageError(f"unknown command {cmd!r}")


def run(job: JobSpec) -> int:
    try:
        payload = execute(job)
        _write(job.output_path, payload)
    except PipelineError as exc:
        print(f"error: {exc.describe()}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ser.SchemaError, UsageError) as exc:
        print(f"error: {job.command}: {exc}", file=sys.stderr)
        return 2
    if job.command == "roundtrip" and not payload["pass"]:
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stieltjes-string",
        description="Exact moment -> continued fraction -> indefinite string pipeline.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--input", dest="input_path")
    parser.add_argument("--output", dest="output_path")
    parser.add_argument("--order", type=int, help="moment order K (gen/roundtrip: max instance size)")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--count", type=int)
    parser.add_argument("--family", help="bench: hilbert|random; gen/roundtrip: measure|string")
    parser.add_argument("--bound", type=int, default=DEFAULT_BOUND, help="numerator/denominator bound for generators")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        job = JobSpec(**vars(args))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(job)


if __name__ == "__main__":
    sys.exit(main())
