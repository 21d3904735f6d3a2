import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
import hypothesis.strategies as st

from zariski import __version__
from zariski.classification import enumerate_k3_rank2, ruled_lattice
from zariski.cli import main
from zariski.engine import d1_scan, divisibility_criterion, zariski_decompose
from zariski.io import (
    lattice_to_dict,
    load_lattice,
    parse_lattice,
    parse_rational,
    render_rational,
)
from zariski.lattice import LatticeError

CORPUS = Path(__file__).resolve().parent.parent / "lattices"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_ok():
    lat = parse_lattice('{"rank":2,"gram":[[-2,4],[4,-2]],"curves":["C1","C2"]}')
    assert lat.gram == ((-2, 4), (4, -2)) and lat.curve_names == ("C1", "C2")


@pytest.mark.parametrize(
    "text, message",
    [
        ('{"rank":2,"gram":[[-2,-1],[-1,0]]}', "off-diagonal must be ≥ 0"),
        ('{"rank":2,"gram":[[-2,1],[2,0]]}', "not symmetric"),
        ('{"rank":3,"gram":[[-2,1],[1,0]]}', "shape"),
        ('{"gram":[[-2,1.5],[1.5,0]]}', "integers"),
        ('{"gram":[[-1,0],[0,-1]],"curves":["a","a"]}', "distinct"),
        ('{"gram":[[-1]],"curves":["a","b"]}', "names"),
        ("[1, 2]", "JSON object"),
        ('{"curves":["a"]}', "missing"),
        ("{not json", "malformed"),
    ],
)
def test_parse_rejections(text, message):
    with pytest.raises(LatticeError, match=message):
        parse_lattice(text)


def test_corpus_files_parse():
    names = {p.stem for p in CORPUS.glob("*.json")}
    assert {"ruled-e1", "ruled-e2", "ruled-e3", "elliptic-chi1", "elliptic-chi2", "k3-a-2-b4", "k3-a0-b2", "non-integral"} <= names
    for p in CORPUS.glob("*.json"):
        lat = load_lattice(p)
        assert lattice_to_dict(lat)["name"] == p.stem
        assert parse_lattice(json.dumps(lattice_to_dict(lat))) == lat


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rational_round_trip(p, q):
    x = Fraction(p, q)
    s = render_rational(x)
    assert parse_rational(s) == x
    assert "/" not in s or (x.denominator > 1 and not s.endswith("/1"))


def test_rational_rendering():
    assert render_rational(Fraction(2, 4)) == "1/2"
    assert render_rational(Fraction(-6, 3)) == "-2"
    with pytest.raises(ValueError):
        parse_rational("0.5")


def test_decompose_cli_matches_library(capsys):
    code, out, _ = run(capsys, "decompose", str(CORPUS / "ruled-e2.json"), "--divisor", "1,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == __version__ and doc["operation"] == "decompose"
    res = zariski_decompose(load_lattice(CORPUS / "ruled-e2.json"), (1, 1))
    assert doc["result"]["P"] == [str(c) for c in res.P] == ["1/2", "1"]
    assert doc["result"]["N"] == ["1/2", "0"]
    assert doc["result"]["denominator"] == 2
    assert doc["result"]["support_N"] == ["C0"]


def test_decompose_cli_rational_tokens_and_oracle(capsys):
    code, out, _ = run(capsys, "decompose", str(CORPUS / "ruled-e2.json"), "--divisor", "1/3,1/2", "--oracle")
    assert code == 0
    assert json.loads(out)["result"]["N"] == ["1/12", "0"]


def test_enumerate_cli(capsys):
    code, out, _ = run(capsys, "enumerate-k3", "--max-b", "6")
    forms = json.loads(out)["result"]["forms"]
    assert [(f["a"], f["b"]) for f in forms] == [(f.a, f.b) for f in enumerate_k3_rank2(6)]
    assert len(forms) == 5


def test_scan_cli(capsys):
    code, out, _ = run(capsys, "scan", str(CORPUS / "k3-a-2-b4.json"), "--max", "10")
    r = json.loads(out)["result"]
    assert code == 0 and r["d1_verdict"] is True and r["max_denominator"] == 1
    rep = d1_scan(load_lattice(CORPUS / "k3-a-2-b4.json"), 10)
    assert r["witness"] == list(rep.witness)


def test_scan_default_max(capsys):
    _, out, _ = run(capsys, "scan", str(CORPUS / "ruled-e3.json"))
    assert json.loads(out)["input"]["max"] == 20


def test_divisibility_cli(capsys):
    _, out, _ = run(capsys, "divisibility", str(CORPUS / "non-integral.json"))
    r = json.loads(out)["result"]
    assert r["d1_necessary_condition_holds"] is divisibility_criterion(load_lattice(CORPUS / "non-integral.json")).holds
    assert r["falsifies_shgh"] is True and "SHGH" in r["note"]


def test_ruled_and_elliptic_cli(capsys):
    _, out, _ = run(capsys, "ruled", "--e", "3", "--max", "5")
    r = json.loads(out)["result"]
    assert r["denominator_bound"] == 3 and r["scan"]["max_denominator"] == 3
    assert r["lattice"]["gram"] == [list(row) for row in ruled_lattice(3).gram]
    _, out, _ = run(capsys, "elliptic", "--chi", "1", "--max", "5")
    r = json.loads(out)["result"]
    assert r["scan"]["d1_verdict"] is True and r["section_square"] == -1


def test_other_commands(capsys):
    assert json.loads(run(capsys, "classify-k3", "--a", "-2", "--b", "4")[1])["result"]["valid"] is True
    r = json.loads(run(capsys, "genus", "--c2", "-2", "--kc", "6")[1])["result"]
    assert r == {"genus": 3, "negativity_bound": True}
    r = json.loads(run(capsys, "fiber-check", str(CORPUS / "fiber-i3.json"), "--mult", "1,1,1")[1])["result"]
    assert r["passes"] is True
    r = json.loads(run(capsys, "third-curve", str(CORPUS / "k3-a-2-b4.json"), "--v3", "5,1")[1])["result"]
    assert r["kind"] == "impossible" and r["violated"] == [{"curve": "C1", "pairing": "-6"}]
    r = json.loads(run(capsys, "det-check", str(CORPUS / "fiber-i3.json"), "--subset", "0,1")[1])["result"]
    assert r == {"det": 3, "expected": 1, "equals_sign_power": False}
    r = json.loads(run(capsys, "closed-form", str(CORPUS / "closed-form-1-3.json"), "--m1", "4", "--m2", "1")[1])
    assert r["result"]["P"] == ["3", "1"]
    r = json.loads(run(capsys, "check-lattice", str(CORPUS / "k3-a0-b2.json"))[1])["result"]
    assert r["hodge_index"] is True and r["det"] == -4


def test_table_format(capsys):
    code, out, _ = run(capsys, "--format", "table", "scan", str(CORPUS / "ruled-e2.json"), "--max", "3")
    assert code == 0 and "result.witness" in out and "(1, 1)" in out
    code, out2, _ = run(capsys, "scan", str(CORPUS / "ruled-e2.json"), "--max", "3", "--format", "table")
    assert out == out2


@pytest.mark.parametrize(
    "argv",
    [
        ["genus", "--c2", "-2", "--kc", "1"],
        ["fiber-check", str(CORPUS / "non-integral.json"), "--mult", "1,1"],
        ["decompose", str(CORPUS / "ruled-e2.json"), "--divisor", "1,-1"],
        ["scan", str(CORPUS / "does-not-exist.json")],
        ["det-check", str(CORPUS / "k3-a-2-b4.json"), "--subset", "0,1"],
    ],
)
def test_domain_errors_exit_1(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err.startswith(f"zariski {argv[0]}:")


@pytest.mark.parametrize("argv", [["frobnicate"], ["decompose", "x.json"], ["decompose", "x.json", "--divisor", "a,b"], []])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point_deterministic():
    cmd = [sys.executable, "-m", "zariski", "scan", str(CORPUS / "ruled-e3.json"), "--max", "6"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["result"]["max_denominator"] == 3
    bad = subprocess.run([sys.executable, "-m", "zariski", "nope"], capture_output=True)
    assert bad.returncode == 2
