import csv
import json
import subprocess
import sys

import pytest

from detloci.checker import analyze
from detloci.cli import COLUMNS, SCHEMA, enumerate_specs, main
from detloci.degrees import DegreeSpec, validate

CUBIC = ["--n", "3", "--t", "2", "--c", "2", "--b", "0,0", "--a", "1,1,1"]
POINTS = ["--n", "3", "--t", "2", "--c", "3", "--b", "0,0", "--a", "1,1,1,1"]
EMPTY = ["--n", "3", "--t", "2", "--c", "2", "--b", "0,0", "--a", "0,0,0"]


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_twisted_cubic(capsys):
    code, out, _ = run(["analyze", *CUBIC], capsys)
    assert code == 0
    assert "conjectured dim: 12" in out


def test_analyze_counterexample_json(capsys):
    code, out, _ = run(["analyze", *POINTS, "--json"], capsys)
    d = json.loads(out)
    assert code == 0
    assert d["counterexample_flag"] and d["upper_bound"] == 13
    assert DegreeSpec.from_dict(d["spec"]) == validate(3, 2, 3, [0, 0], [1, 1, 1, 1])


def test_analyze_bad_length(capsys):
    code, _, err = run(["analyze", "--a", "1,1", "--t", "2", "--c", "2", "--n", "3", "--b", "0,0"], capsys)
    assert code == 1 and "BadLength" in err


def test_analyze_unsorted_and_usage(capsys):
    assert run(["analyze", "--n", "3", "--t", "2", "--c", "2", "--b", "0,0", "--a", "1,0,1"], capsys)[0] == 1
    assert run(["analyze", "--n", "3"], capsys)[0] == 1
    assert run(["analyze", *CUBIC, "--char", "4"], capsys)[0] == 1
    assert run(["frobnicate"], capsys)[0] == 1


def test_analyze_empty(capsys):
    code, out, _ = run(["analyze", *EMPTY], capsys)
    assert code == 2 and "nonempty: no" in out


def test_betti(capsys):
    code, out, _ = run(["betti", *CUBIC], capsys)
    assert code == 0
    assert "ranks: 1 3 2" in out and "Hilbert polynomial: 3v+1" in out
    code, out, _ = run(["betti", *POINTS], capsys)
    assert "Hilbert polynomial: 4" in out
    assert run(["betti", *EMPTY], capsys)[0] == 2


def test_betti_json(capsys):
    code, out, _ = run(["betti", *CUBIC, "--json"], capsys)
    d = json.loads(out)
    assert d["ranks"] == [1, 3, 2]
    assert d["betti"][1] == {"p": 1, "degrees": [2, 2, 2]}


def test_verify_twisted_cubic(capsys):
    code, out, _ = run(["verify", *CUBIC, "--checks", "codim,hilbert"], capsys)
    assert code == 0
    assert out.splitlines()[0].startswith("codim: PASS")
    assert out.splitlines()[1].startswith("hilbert: PASS")


def test_verify_tangent_counterexample(capsys):
    code, out, _ = run(["verify", *POINTS, "--checks", "tangent"], capsys)
    assert code == 0
    assert "COUNTEREXAMPLE-CONFIRMED" in out and "tangent 12 < upper bound 13" in out


def test_verify_mixedsum_staggered(capsys):
    spec = ["--n", "4", "--t", "2", "--c", "3", "--b", "0,0", "--a", "1,1,1,1"]
    code, out, _ = run(["verify", *spec, "--checks", "mixedsum", "--matrix", "staggered"], capsys)
    assert code == 0 and "mixedsum: PASS" in out


def test_verify_failures_and_skips(capsys):
    # the hypothesis a_0 > b_t fails: reported as SKIP, not a crash, and not all-pass
    spec = ["--n", "4", "--t", "2", "--c", "3", "--b", "0,0", "--a", "0,1,1,1"]
    code, out, _ = run(["verify", *spec, "--checks", "mixedsum"], capsys)
    assert code == 3 and "SKIP" in out
    assert run(["verify", *EMPTY], capsys)[0] == 2
    assert run(["verify", *CUBIC, "--checks", "bogus"], capsys)[0] == 1


def test_verify_budget(capsys, monkeypatch):
    monkeypatch.setenv("DETLOCI_BUDGET", "1")
    spec = ["--n", "5", "--t", "2", "--c", "3", "--b", "0,0", "--a", "1,1,2,2"]
    code, out, _ = run(["verify", *spec, "--checks", "codim", "--json"], capsys)
    assert code == 3
    assert json.loads(out)["checks"][0]["status"] == "BUDGET"


def _read(path):
    lines = path.read_text().splitlines()
    assert lines[0] == SCHEMA and lines[1] == ",".join(COLUMNS)
    return list(csv.DictReader(lines[1:]))


def test_sweep_counts_and_consistency(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert main(["sweep", "--t", "2", "--c", "3", "--n", "5", "--deg-min", "0", "--deg-max", "2",
                 "--out", str(out)]) == 0
    rows = _read(out)
    assert len(rows) == 6 * 15  # sorted b in [0,2]^2 times sorted a in [0,2]^4
    assert [r["key"] for r in rows] == sorted(r["key"] for r in rows)
    for r in rows[::7]:
        s = validate(int(r["n"]), int(r["t"]), int(r["c"]), r["b"].split(), r["a"].split())
        rep = analyze(s)
        assert r["key"] == s.key()
        assert r["nonempty"] == ("1" if rep.nonempty else "0")
        assert r["dim"] == ("" if rep.conjectured_dim is None else str(rep.conjectured_dim))
        assert r["rules"][:-1] == rep.rule_bits()
    boundary = [r for r in rows if r["rules"].endswith("B")]
    assert boundary and all(r["a"].split()[-1] == r["a"].split()[0] for r in boundary)


def test_sweep_deterministic_jobs_and_resume(tmp_path, capsys):
    args = ["sweep", "--t", "2", "--c", "2", "--n", "3", "--deg-min", "-1", "--deg-max", "2"]
    one, two, part = tmp_path / "1.csv", tmp_path / "2.csv", tmp_path / "p.csv"
    assert main(args + ["--out", str(one)]) == 0
    assert main(args + ["--out", str(two), "--jobs", "3"]) == 0
    assert one.read_bytes() == two.read_bytes()
    # interrupted run: a prefix cut in the middle of a line
    data = one.read_bytes()
    part.write_bytes(data[: len(data) // 2 + 3])
    assert main(args + ["--out", str(part)]) == 0
    assert part.read_bytes() == data
    # rerun adds nothing
    assert main(args + ["--out", str(part)]) == 0
    assert part.read_bytes() == data
    assert "wrote 0 rows" in capsys.readouterr().out


def test_sweep_rejects_foreign_file(tmp_path, capsys):
    f = tmp_path / "x.csv"
    f.write_text("hello\nworld\n")
    assert main(["sweep", "--t", "2", "--c", "2", "--n", "3", "--deg-max", "1", "--out", str(f)]) == 1


def test_sweep_with_checks(tmp_path, capsys):
    out = tmp_path / "c.csv"
    assert main(["sweep", "--t", "2", "--c", "2", "--n", "3", "--deg-min", "0", "--deg-max", "1",
                 "--out", str(out), "--checks", "codim"]) == 0
    rows = _read(out)
    assert all(r["checks"] == ("codim=PASS" if r["nonempty"] == "1" else "") for r in rows)


def test_enumerate_specs_unique():
    specs = enumerate_specs(4, 2, 3, 0, 2)
    assert len({s.key() for s in specs}) == len(specs)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "detloci", "betti", *CUBIC],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "3v+1" in proc.stdout
