import json

import pytest

from affcrystal.cli import main, parse_weight


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_count(capsys):
    code, out, _ = run(capsys, "crystal", "enumerate", "--n", "3", "--count")
    assert code == 0 and out.strip() == "14"


def test_multiplicity(capsys):
    code, out, _ = run(capsys, "crystal", "mult", "--n", "8", "--weight", "e3-e7")
    assert code == 0 and out.strip() == "5"


def test_gc_verify_exit_zero(capsys):
    code, _, _ = run(capsys, "gc", "verify", "--n", "4", "--samples", "100", "--seed", "42")
    assert code == 0


@pytest.mark.parametrize("argv", [
    ("crystal", "mult", "--n", "8", "--weight", "e9"),
    ("gc", "verify", "--n", "9"),
    ("pc", "dump", "--n", "2", "--level", "9"),
    ("nonsense",),
])
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and err


@pytest.mark.parametrize("argv", [
    ("ud", "verify-iso", "--n", "3", "--samples", "50", "--json"),
    ("gc", "verify", "--n", "2", "--samples", "10", "--json"),
    ("pc", "verify-level", "--n", "2", "--level", "1", "--json"),
])
def test_json_is_deterministic(capsys, argv):
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b
    rep = json.loads(a)
    assert rep["counts"]["violations"] == 0 and "wall_time" not in rep


def test_timing_flag_adds_wall_time(capsys):
    rep = json.loads(run(capsys, "crystal", "enumerate", "--n", "2", "--json", "--timing")[1])
    assert rep["wall_time"] >= 0


def test_dot_dump(capsys, tmp_path):
    out = tmp_path / "b.dot"
    code, _, _ = run(capsys, "pc", "dump", "--n", "2", "--level", "1", "--format", "dot",
                     "--out", str(out))
    text = out.read_text()
    assert code == 0 and text.startswith("digraph") and 'label="f_0"' in text


def test_transport_printed_reports_violations(capsys):
    code, _, _ = run(capsys, "ud", "transport", "--n", "4", "--samples", "200")
    assert code == 1
    code, _, _ = run(capsys, "ud", "transport", "--n", "4", "--samples", "200", "--corrected")
    assert code == 0


def test_trop_eval(capsys):
    code, out, _ = run(capsys, "trop", "eval", "--n", "2", "--i", "2", "--c", "1", "--x", "0,0,0",
                       "--json")
    assert code == 0 and json.loads(out)["result"]["tropicalized"] == [1, 0, 0]


def test_weight_syntax():
    assert parse_weight("e3-e7", 8) == (0, 0, 1, 0, 0, 0, -1, 0)
    assert parse_weight("0", 3) == (0, 0, 0)
    with pytest.raises(ValueError):
        parse_weight("e9", 8)
