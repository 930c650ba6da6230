import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from catent.cli import PROFILE_HEADER, SCAN_HEADER, dump_json, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_kt_example():
    code, out, _ = call("kt", "--dimv", "11", "--lambda", "9", "--d", "3")
    data = json.loads(out)
    assert code == 0
    assert data["verdict"] == "StrictGap" and data["schema_version"] == 1
    assert data["h0"]["exact"] == "log((119+sqrt(14157))/2)"
    assert data["h0"]["value"] == pytest.approx(4.77901, abs=1e-4)


def test_serre_example():
    code, out, _ = call("serre", "--n", "2")
    data = json.loads(out)
    assert code == 0 and data["h0"]["value"] == 0 and data["h0"]["a"] == 2


def test_braid_example():
    code, out, _ = call("braid", "--word", "", "--i", "2", "--word2", "", "--j", "1", "--d", "3")
    data = json.loads(out)
    assert code == 0
    assert (data["p"], data["dimV"], data["h0"]["value"]) == ("q^2", 1, 0)


def test_exit_codes():
    assert call("kt", "--dimv", "4", "--lambda", "2", "--d", "2")[0] == 2
    assert call("cy", "--n", "1", "--m", "2")[0] == 2
    assert call("braid", "--i", "1", "--j", "1", "--d", "3")[0] == 3
    assert call("entropy", "--dimv", "3", "--d", "2", "--w", "2")[0] == 3
    assert call("entropy", "--dimv", "2", "--d", "3", "--w", "1")[0] == 1
    assert call("cy", "--n", "2", "--m", "1")[0] == 1
    assert call("braid", "--word", "s7", "--i", "1", "--j", "2", "--d", "3")[0] == 1
    code, _, err = call("kt", "--dimv", "x", "--lambda", "1", "--d", "3")
    assert code == 1 and "usage: catent kt" in err
    code, _, err = call("kt", "--dimv", "3", "--lambda", "1", "--d", "3", "--bogus", "1")
    assert code == 1
    assert call("frobnicate")[0] == 1


def test_scan_grid_examples():
    code, out, _ = call("scan", "--n-range", "2:4", "--m-range", "2:4")
    table = rows(out)
    assert code == 0 and out.splitlines()[0] == ",".join(SCAN_HEADER)
    assert [(int(r["n"]), int(r["m"])) for r in table] == [(n, m) for n in range(2, 5) for m in range(2, 5)]
    assert table[0]["verdict"] == "StrictGap"
    code, out, _ = call("--format", "json", "scan", "--n-range", "2:4", "--m-range", "2:4")
    labels = {(r["n"], r["m"]): r["case_label"] for r in json.loads(out)["rows"]}
    assert labels[(2, 2)] == "2" and "outside" in labels.values()


def test_scan_single_point_and_empty():
    _, out, _ = call("scan", "--grid", "kt", "--dimv-range", "3", "--lambda-range", "3", "--d-range", "3")
    table = rows(out)
    assert len(table) == 1 and table[0]["verdict"] == "Equal"
    _, out, _ = call("scan", "--n-range", "5:4", "--m-range", "2:3")
    assert out == ",".join(SCAN_HEADER) + "\n"


def test_scan_row_errors_do_not_stop():
    _, out, _ = call("scan", "--n-range", "2", "--m-range", "1:2")
    table = rows(out)
    assert table[0]["error"].startswith("ValueError") and table[1]["verdict"] == "StrictGap"


def test_scan_parallel_matches_serial(monkeypatch):
    args = ("scan", "--grid", "kt", "--dimv-range", "0:6", "--lambda-range=-4:4", "--d-range", "1:3")
    serial = call(*args, "--workers", "1")[1]
    parallel = call(*args, "--workers", "3")[1]
    monkeypatch.setenv("CATENT_WORKERS", "2")
    from_env = call(*args)[1]
    assert serial == parallel == from_env
    assert len(rows(serial)) == 7 * 9 * 3


def test_profile_csv_examples():
    _, out, _ = call("profile-csv", "--dimv", "2", "--d", "3", "--w", "1", "--ambient")
    assert out.splitlines()[0] == ",".join(PROFILE_HEADER)
    got = [(float(r["t"]), float(r["lower"]), float(r["upper"]), r["exact"]) for r in rows(out)]
    assert got == [(t, max(-2 * t, 0.0), max(-2 * t, 0.0), "true") for t in (-1, -0.5, 0, 0.5, 1)]
    _, out, _ = call("profile-csv", "--dimv", "0", "--d", "1")
    assert all(r["lower"] == r["upper"] == "0" and r["exact"] == "true" for r in rows(out))
    _, out, _ = call("profile-csv", "--dimv", "5", "--d", "2", "--ambient")
    table = rows(out)  # h0(5) = log((23+sqrt(525))/2) = 3.1336...
    assert table[2]["lower"] == table[2]["upper"] and table[2]["lower"].startswith("3.1335")
    assert table[0]["exact"] == "false" and float(table[0]["lower"]) <= float(table[0]["upper"])


def test_profile_csv_bad_range():
    assert call("profile-csv", "--dimv", "0", "--d", "1", "--t-min", "1", "--t-max", "0")[0] == 1
    assert call("profile-csv", "--dimv", "0", "--d", "1", "--step", "0")[0] == 1


@given(st.integers(0, 8), st.integers(1, 5), st.integers(0, 5), st.booleans(), st.booleans(),
       st.floats(-5, 5), st.floats(0.1, 3))
def test_profile_rows_bounds_ordered(dimV, d, w, orth, amb, t0, step):
    args = ["profile-csv", "--dimv", str(dimV), "--d", str(d), "--w", str(w),
            "--t-min", repr(t0), "--t-max", repr(t0 + 4 * step), "--step", repr(step)]
    args += ["--orthogonal"] * orth + ["--ambient"] * amb
    code, out, _ = call(*args)
    if code:
        return
    for r in rows(out):
        assert float(r["lower"]) <= float(r["upper"])


@pytest.mark.parametrize("argv", [
    ("kt", "--dimv", "11", "--lambda", "9", "--d", "3"),
    ("cy", "--n", "3", "--m", "2"),
    ("entropy", "--dimv", "5", "--d", "2"),
    ("entropy", "--d", "3", "--single"),
    ("serre", "--n", "5"),
    ("braid", "--word", "s1 S2", "--i", "1", "--word2", "2", "--j", "2", "--d", "3"),
])
def test_json_roundtrip(argv):
    _, out, _ = call(*argv)
    data = json.loads(out)
    payload = {k: v for k, v in data.items() if k != "schema_version"}
    assert dump_json(payload) + "\n" == out


def test_human_and_output_file(tmp_path):
    code, out, _ = call("--format", "human", "kt", "--dimv", "3", "--lambda", "3", "--d", "3")
    assert code == 0 and "verdict: Equal" in out
    target = tmp_path / "r.json"
    code, out, _ = call("--output", str(target), "cy", "--n", "2", "--m", "2")
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["kt"]["verdict"] == "StrictGap"
    assert call("--format", "csv", "kt", "--dimv", "3", "--lambda", "3", "--d", "3")[0] == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "catent", "serre", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["h0"]["a"] == 7
