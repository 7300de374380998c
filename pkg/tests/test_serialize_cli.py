import json
import subprocess
import sys
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from stieltjes_string import DiscreteMeasure
from stieltjes_string import serialize as ser
from stieltjes_string.cli import main
from stieltjes_string.expansion import INFINITE, StringData, contfrac_from_moments, string_from_moments
from stieltjes_string.forward import weyl_from_measure
from stieltjes_string.generators import gen_random_string
from stieltjes_string.hankel import hankel_table
from stieltjes_string.moments import moments_from_measure

from conftest import measures


@pytest.mark.parametrize("text, value", [("3", F(3)), ("-2/4", F(-1, 2)), ("+7/3", F(7, 3)), (" 5 ", F(5))])
def test_rat_from_str(text, value):
    assert ser.rat_from_str(text) == value


@pytest.mark.parametrize("bad", ["1.5", "1e3", "a/b", "1/0", "", 3, None, "1/-2"])
def test_rat_from_str_rejects(bad):
    with pytest.raises(ser.SchemaError):
        ser.rat_from_str(bad)


@settings(max_examples=40, deadline=None)
@given(measures(max_points=4))
def test_json_roundtrips(mu):
    assert ser.measure_from_json(json.loads(ser.dumps(ser.measure_to_json(mu)))) == mu
    ms = moments_from_measure(mu, mu.D)
    assert ser.moments_from_json(ser.moments_to_json(ms)) == ms
    t = hankel_table(ms)
    assert ser.table_from_json(ser.table_to_json(t)).delta == t.delta
    cf = contfrac_from_moments(ms)
    assert ser.contfrac_from_json(ser.contfrac_to_json(cf)) == cf
    sd = string_from_moments(ms)
    assert ser.string_from_json(ser.string_to_json(sd)) == sd
    m = weyl_from_measure(mu)
    assert ser.ratfun_from_json(ser.ratfun_to_json(m)) == m


def test_string_length_encoding():
    sd = StringData(INFINITE, (), (F(0),), (F(1),))
    assert ser.string_to_json(sd)["L"] == "inf"
    assert ser.string_to_json(StringData(None, (), (F(0),), (F(0),)))["L"] is None
    assert ser.string_to_json(StringData(F(3, 2), (), (F(0),), (F(0),)))["L"] == "3/2"


def test_missing_field():
    with pytest.raises(ser.SchemaError):
        ser.moments_from_json({"s": ["1"]})
    with pytest.raises(ser.SchemaError):
        ser.measure_from_json({"points": [{"lambda": "1"}]})


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_delta1(tmp_path, capsys):
    path = write(tmp_path, "mu.json", {"points": [{"lambda": "1", "mass": "1"}]})
    code, out, _ = run_cli(["expand", "--input", path], capsys)
    assert code == 0
    cf = json.loads(out)
    assert cf["l"] == ["1"] and cf["r"] == "0" and cf["terminated"] is True


def test_reconstruct_delta0_moments(tmp_path, capsys):
    path = write(tmp_path, "ms.json", {"s_minus2": "0", "s_minus1": "0", "s": ["1", "0", "0"]})
    code, out, _ = run_cli(["reconstruct", "--input", path], capsys)
    assert code == 0
    assert json.loads(out) == {"L": "1", "x": [], "omega": ["0"], "upsilon": ["0"], "boundary_upsilon": None}


def test_hankel_and_forward(tmp_path, capsys):
    path = write(tmp_path, "mu.json", {"points": [{"lambda": "1", "mass": "1"}, {"lambda": "-1", "mass": "1"}]})
    code, out, _ = run_cli(["hankel", "--input", path], capsys)
    assert code == 0 and json.loads(out)["delta"]["0"] == ["1", "2", "4", "0"]
    out_path = tmp_path / "sd.json"
    assert main(["reconstruct", "--input", path, "--output", str(out_path)]) == 0
    code, out, _ = run_cli(["forward", "--input", str(out_path)], capsys)
    assert code == 0 and json.loads(out) == {"num": ["0", "-2"], "den": ["-1", "0", "1"]}


def test_order_truncates_moments(tmp_path, capsys):
    path = write(tmp_path, "mu.json", {"points": [{"lambda": "1", "mass": "1"}, {"lambda": "-1", "mass": "1"}]})
    code, out, _ = run_cli(["expand", "--input", path, "--order", "1"], capsys)
    cf = json.loads(out)
    assert code == 0 and cf["terminated"] is False and cf["boundary_upsilon"] == "2"


def test_roundtrip_batch(capsys):
    code, out, _ = run_cli(["roundtrip", "--seed", "7", "--count", "100"], capsys)
    payload = json.loads(out)
    assert code == 0 and payload["pass"] is True
    assert len(payload["instances"]) == 200


def test_roundtrip_file(tmp_path, capsys):
    path = write(tmp_path, "sd.json", ser.string_to_json(gen_random_string(4, 4, 10)))
    code, out, _ = run_cli(["roundtrip", "--input", path], capsys)
    assert code == 0 and json.loads(out)["pass"] is True


def test_gen_shapes(capsys):
    code, out, _ = run_cli(["gen", "--seed", "2"], capsys)
    assert code == 0 and "points" in json.loads(out)
    code, out, _ = run_cli(["gen", "--family", "string", "--seed", "2", "--count", "3"], capsys)
    assert code == 0 and len(json.loads(out)) == 3


def test_domain_error_exit_1(tmp_path, capsys):
    path = write(tmp_path, "mu.json", {"points": [{"lambda": "1", "mass": "-1"}]})
    code, _, err = run_cli(["expand", "--input", path], capsys)
    assert code == 1 and "invalid measure" in err
    path = write(tmp_path, "ms.json", {"s_minus2": "0", "s_minus1": "0", "s": ["1", "0", "-1"]})
    code, _, err = run_cli(["reconstruct", "--input", path], capsys)
    assert code == 1 and "inconsistent moment data" in err


@pytest.mark.parametrize(
    "args",
    [
        ["expand"],
        ["expand", "--input", "/nonexistent/file.json"],
        ["bench-conditioning", "--family", "gaussian"],
        ["gen", "--count", "0"],
    ],
)
def test_usage_errors_exit_2(args, capsys):
    assert run_cli(args, capsys)[0] == 2


def test_malformed_json_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run_cli(["expand", "--input", str(bad)], capsys)[0] == 2
    path = write(tmp_path, "mu.json", {"points": [{"lambda": 1.5, "mass": "1"}]})
    assert run_cli(["expand", "--input", path], capsys)[0] == 2


def test_byte_identical_output(tmp_path):
    outs = []
    for name in ("a.json", "b.json"):
        p = tmp_path / name
        assert main(["gen", "--family", "string", "--seed", "9", "--count", "20", "--output", str(p)]) == 0
        outs.append(p.read_bytes())
    assert outs[0] == outs[1]


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "stieltjes_string", "gen", "--seed", "1"], capture_output=True, text=True, check=False
    )
    assert res.returncode == 0 and "points" in json.loads(res.stdout)
