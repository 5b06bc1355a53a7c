import json
import subprocess
import sys

import pytest

from agmagma.cli import main, parse_pairs
from agmagma.core import FIXTURES, C3, P6, R2, T1, Z3g, format_magma, parse_magma
from agmagma.report import Report, analyze, congruence_lattice_dot, hclass_dot


@pytest.fixture
def fixture_files(tmp_path):
    paths = {}
    for name, m in FIXTURES.items():
        p = tmp_path / f"{name}.cayley"
        p.write_text(format_magma(m))
        paths[name] = str(p)
    return paths


def test_analyze_z3g():
    r = analyze(Z3g, "Z3g")
    assert {"AG", "AG_SS", "AG_GROUP"} <= set(r.labels)
    assert r.green["H"] == [[0, 1, 2]]
    assert r.sigma == [[0], [1], [2]]
    assert r.kernel == {"idempotent": 0, "elements": [0, 1, 2], "phi": [0, 1, 2]}
    assert r.subdirect["holds"]


def test_analyze_r2_marks_sections_not_applicable():
    r = analyze(R2, "R2")
    assert r.laws["left-invertive"] == {"holds": False, "counterexample": [0, 0, 1]}
    assert r.labels == []
    for key in ("extremal", "lallement", "kernel", "sigma", "subdirect"):
        assert getattr(r, key).startswith("not applicable:")


def test_analyze_t1():
    r = analyze(T1, "T1")
    assert all(v["holds"] for v in r.laws.values())
    assert r.congruence_count == 1
    assert r.extremal["least_semilattice"] == [[0]]
    assert r.lallement == [{"congruence": [[0]],
                            "idempotent_blocks": [{"block": [0], "a": 0, "witness": 0}]}]


def test_report_json_roundtrip_and_stability():
    for m in (P6, C3, R2):
        r = analyze(m, "x")
        text = r.to_json()
        assert Report.from_json(text) == r
        assert Report.from_json(text).to_json() == text
        assert analyze(m, "x").to_json() == text


def test_report_above_congruence_guard():
    from agmagma.core import S2, cyclic_ag_group, direct_product
    r = analyze(direct_product(S2, cyclic_ag_group(7)), "S2xZ7")
    assert r.congruence_count.startswith("not applicable")
    assert r.extremal["certified"] is False
    assert r.sigma is not None and r.subdirect["holds"]


def test_dot_output():
    dot = hclass_dot(C3)
    assert "h0 -> h1;" in dot and "h1 -> h2;" in dot
    lat = congruence_lattice_dot(C3)
    assert lat.count("->") == 4
    assert lat.startswith("digraph congruences {")


def test_parse_pairs():
    assert parse_pairs(" 0, 1 ; 2,3;") == [(0, 1), (2, 3)]
    with pytest.raises(ValueError):
        parse_pairs("0,1,2")


def test_cli_check(fixture_files, capsys):
    assert main(["check", fixture_files["R2"], "--law", "left-invertive"]) == 0
    assert capsys.readouterr().out.strip() == "left-invertive: fails at (0, 0, 1)"
    assert main(["check", fixture_files["Z3g"], "--law", "ag-star-star"]) == 0
    assert "holds" in capsys.readouterr().out


def test_cli_analyze_json_and_dot(fixture_files, tmp_path, capsys):
    prefix = str(tmp_path / "p6")
    assert main(["analyze", fixture_files["P6"], "--json", "--dot", prefix]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["sigma"] == [[0, 3], [1, 4], [2, 5]]
    assert data["extremal"]["least_semilattice"] == [[0, 1, 2], [3, 4, 5]]
    assert (tmp_path / "p6_hclasses.dot").exists()
    assert (tmp_path / "p6_congruences.dot").exists()
    assert main(["analyze", fixture_files["R2"]]) == 0
    assert "not applicable" in capsys.readouterr().out


def test_cli_congruences_and_quotient(fixture_files, capsys):
    assert main(["congruences", fixture_files["C3"]]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "4 congruences"
    assert main(["quotient", fixture_files["C3"], "--pairs", "0,1"]) == 0
    q = parse_magma(capsys.readouterr().out)
    assert q.table == ((0, 0), (0, 1))


def test_cli_enumerate(tmp_path, capsys):
    assert main(["enumerate", "--order", "2", "--class", "ag", "--count-only"]) == 0
    assert capsys.readouterr().out.strip() == "6"
    assert main(["enumerate", "--order", "2", "--class", "completely-inverse-ag-star-star",
                 "--up-to-iso", "--format", "jsonl"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 2
    out = tmp_path / "models"
    assert main(["enumerate", "--order", "2", "--class", "ag", "--out", str(out)]) == 0
    assert len(list(out.iterdir())) == 6


def test_cli_iso(fixture_files, capsys):
    assert main(["iso", fixture_files["S2"], fixture_files["S2"]]) == 0
    assert capsys.readouterr().out.strip() == "isomorphic: 0 1"
    assert main(["iso", fixture_files["S2"], fixture_files["Z2"]]) == 0
    assert capsys.readouterr().out.strip() == "not isomorphic"


def test_cli_errors_exit_nonzero(tmp_path, capsys):
    bad = tmp_path / "bad.cayley"
    bad.write_text("2\n0 2\n0 1\n")
    assert main(["analyze", str(bad)]) == 1
    err = capsys.readouterr().err
    assert "entry 2 out of range at row 0" in err and "bad.cayley" in err
    assert main(["analyze", str(tmp_path / "missing.cayley")]) == 1
    with pytest.raises(SystemExit) as exc:
        main(["check", str(bad), "--law", "nonsense"])
    assert exc.value.code != 0


def test_module_entry_point(fixture_files):
    proc = subprocess.run([sys.executable, "-m", "agmagma", "analyze", fixture_files["Z3g"], "--json"],
                          capture_output=True, text=True, check=True)
    again = subprocess.run([sys.executable, "-m", "agmagma", "analyze", fixture_files["Z3g"], "--json"],
                           capture_output=True, text=True, check=True)
    assert proc.stdout == again.stdout
    assert json.loads(proc.stdout)["input"] == "Z3g.cayley"
