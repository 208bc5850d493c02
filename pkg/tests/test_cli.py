import csv
import io
import json
import math
import subprocess
import sys

import pytest

from sweepcover.cli import main, parse_grid, UsageError


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def read_csv(text):
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


def test_enumerate_rows(capsys):
    code, out, err = run(["enumerate", "--n", "2", "--kmax", "4"], capsys)
    assert code == 0
    rows = read_csv(out)
    assert [(r["k"], r["f"]) for r in rows] == [("1", "1"), ("2", "4"), ("3", "16"), ("4", "80")]
    assert rows[0]["total"] == "2"
    assert "agree" in err


def test_enumerate_n3_kmax1(capsys):
    code, out, _ = run(["enumerate", "--n", "3", "--kmax", "1"], capsys)
    assert code == 0
    assert [(r["k"], r["f"]) for r in read_csv(out)] == [("1", "1")]


def test_enumerate_rejects_n1(capsys):
    code, _, err = run(["enumerate", "--n", "1", "--kmax", "3"], capsys)
    assert code == 1
    assert "n >= 2" in err


def test_enumerate_k0_convention_and_json(capsys):
    code, out, _ = run(["enumerate", "--n", "2", "--kmax", "3", "--format", "json",
                        "--total-convention", "k0"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["series_agrees"] is True
    assert [r["total"] for r in data["rows"]] == [1, 4, 16]


def test_big_integers_are_exact_in_json(capsys):
    code, out, _ = run(["enumerate", "--n", "2", "--kmax", "40", "--format", "json"], capsys)
    from sweepcover.recurrence import f_table
    rows = json.loads(out)["rows"]
    assert int(rows[-1]["f"]) == f_table(2, 40)[40]


@pytest.mark.parametrize("k,depth,census", [(2, 3, 4), (1, 2, 1), (3, 4, 16)])
def test_oracle(capsys, k, depth, census):
    code, out, err = run(["oracle", "--n", "2", "--k", str(k), "--depth", str(depth)], capsys)
    assert code == 0
    row = read_csv(out)[0]
    assert row["census"] == str(census) and row["recurrence"] == str(census)
    assert row["match"] == "true"
    assert "match" in err


def test_oracle_shallow_depth_is_flagged(capsys):
    code, _, err = run(["oracle", "--n", "2", "--k", "3", "--depth", "2"], capsys)
    assert code == 3
    assert "below k+1" in err


def test_oracle_cap_exit_code(capsys):
    code, _, err = run(["oracle", "--n", "3", "--k", "2", "--depth", "12",
                        "--max-nodes", "1000"], capsys)
    assert code == 2
    code, _, _ = run(["oracle", "--n", "2", "--k", "4", "--max-antichains", "3"], capsys)
    assert code == 2


def test_singularity_n2(capsys):
    code, out, _ = run(["singularity", "--n", "2", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["R"] == pytest.approx(0.125, abs=1e-12)
    assert data["D"] == pytest.approx(8.0, rel=1e-12)
    assert data["c"] == pytest.approx(0.5, abs=1e-10)
    assert data["C"] == pytest.approx(0.14105, abs=1e-5)
    assert data["ratio_check"] is True


def test_singularity_n3_reports_d_above_3(capsys):
    code, out, _ = run(["singularity", "--n", "3"], capsys)
    assert code == 0
    row = read_csv(out)[0]
    assert float(row["D"]) > 3 and row["D_exceeds_n"] == "true"


@pytest.mark.parametrize("tol", ["0", "-1", "nan"])
def test_singularity_bad_tol(capsys, tol):
    code, _, _ = run(["singularity", "--n", "2", "--tol", tol], capsys)
    assert code == 1


def test_asymptotics_csv(tmp_path, capsys):
    target = tmp_path / "a.csv"
    code, out, _ = run(["asymptotics", "--n", "2", "--kmax", "300", "--out", str(target)],
                       capsys)
    assert code == 0
    text = target.read_text()
    assert text.startswith("# n=2,D_n=8,C_n=")
    rows = read_csv(text)
    assert len(rows) == 300 and list(rows[0]) == ["k", "f_root_k", "ratio"]
    assert float(rows[0]["f_root_k"]) == 1.0
    assert abs(float(rows[-1]["ratio"]) * 4 * math.sqrt(math.pi) - 1) < 0.02
    assert "first exceeds n at k=3" in out


def test_asymptotics_svg(tmp_path, capsys):
    target = tmp_path / "fig.svg"
    code, _, _ = run(["asymptotics", "--n", "2", "--kmax", "60", "--format", "svg",
                      "--out", str(target)], capsys)
    assert code == 0
    svg = target.read_text()
    assert svg.count("<polyline") == 2
    assert "stroke-dasharray" in svg
    import xml.dom.minidom
    xml.dom.minidom.parseString(svg)


def test_asymptotics_kmax_budget(capsys):
    code, _, _ = run(["asymptotics", "--n", "2", "--kmax", "401"], capsys)
    assert code == 1


def test_bounds_grid_report(capsys):
    code, out, err = run(["bounds", "--grid", "n=2,m=1,k=1"], capsys)
    assert code == 0
    row = read_csv(out)[0]
    assert row["min_value"] == "2"
    assert row["lower_holds"] == "true" and row["upper_holds"] == "false"
    assert math.exp(float(row["log_lower"])) == pytest.approx(1.919, abs=1e-3)
    assert math.exp(float(row["log_upper"])) == pytest.approx(1.128, abs=1e-3)


def test_bounds_schur_row(capsys):
    code, out, _ = run(["bounds", "--grid", "n=6,m=2,k=2"], capsys)
    row = read_csv(out)[0]
    assert row["min_composition"] == "3 3" and row["max_composition"] == "4 2"
    code, out, _ = run(["bounds", "--grid", "n=4,m=2,k=2"], capsys)
    row = read_csv(out)[0]
    assert row["count"] == "1" and row["min_value"] == row["max_value"]


@pytest.mark.parametrize("grid", ["x=3", "n=1-24,m=1-3", "n=5-2,m=1,k=1", "n=a,m=1,k=1"])
def test_bounds_malformed_grid(capsys, grid):
    code, _, _ = run(["bounds", "--grid", grid], capsys)
    assert code == 1


def test_parse_grid():
    g = parse_grid("n=1-24,m=1-3,k=2")
    assert g["n"] == range(1, 25) and g["k"] == range(2, 3)
    with pytest.raises(UsageError):
        parse_grid("n=1,n=2,m=1,k=1")


def test_unknown_subcommand(capsys):
    assert main(["frobnicate"]) == 1
    assert main([]) == 1


COMMANDS = [
    ["enumerate", "--n", "3", "--kmax", "25"],
    ["enumerate", "--n", "3", "--kmax", "25", "--format", "json"],
    ["oracle", "--n", "3", "--k", "3"],
    ["oracle", "--n", "3", "--k", "3", "--format", "json"],
    ["singularity", "--n", "4"],
    ["singularity", "--n", "4", "--format", "json"],
    ["asymptotics", "--n", "3", "--kmax", "120"],
    ["asymptotics", "--n", "3", "--kmax", "120", "--format", "json"],
    ["bounds", "--grid", "n=1-12,m=1-3,k=1-3"],
    ["bounds", "--grid", "n=1-12,m=1-3,k=1-3", "--format", "json"],
]


@pytest.mark.parametrize("argv", COMMANDS, ids=lambda a: "-".join(a[:1] + a[-1:]))
def test_outputs_are_byte_identical(tmp_path, capsys, argv):
    outputs = []
    for i in range(2):
        target = tmp_path / f"out{i}"
        assert main(argv + ["--out", str(target)]) == 0
        outputs.append(target.read_bytes())
    capsys.readouterr()
    assert outputs[0] == outputs[1]


def test_svg_identical_up_to_version_line(tmp_path, capsys):
    texts = []
    for i in range(2):
        target = tmp_path / f"f{i}.svg"
        main(["asymptotics", "--n", "2", "--kmax", "50", "--format", "svg", "--out", str(target)])
        texts.append([l for l in target.read_text().splitlines() if not l.startswith("<!--")])
    assert texts[0] == texts[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "sweepcover", "enumerate", "--n", "2",
                           "--kmax", "3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["k,f,total", "1,1,2", "2,4,4", "3,16,16"]
