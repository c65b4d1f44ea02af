import json
import subprocess
import sys


def run(*args, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "lrbasis.cli", *args],
                          capture_output=True, text=True, input=stdin)
    return proc


RUN = ["--D", "3,3,2,1,1", "--E", "3,3,2,1", "--F", "5,5,4,3,1,1"]
SMALL = ["--D", "1", "--E", "1", "--F", "2"]


def test_count():
    p = run("count", *RUN)
    assert p.returncode == 0
    assert json.loads(p.stdout) == {"lr_count": 4, "oracle_count": 4}


def test_count_text_format():
    p = run("--format", "text", "count", *SMALL)
    assert p.returncode == 0
    assert "lr_count=1" in p.stdout


def test_tableaux():
    p = run("tableaux", *RUN)
    tabs = json.loads(p.stdout)
    assert len(tabs) == 4
    assert all(set(t) == {"outer", "inner", "rows"} for t in tabs)


def test_peel_and_monomials_by_index():
    p = run("peel", *RUN, "--index", "0")
    out = json.loads(p.stdout)
    assert len(out["strips"]) == 4
    p = run("monomials", *RUN, "--index", "0")
    out = json.loads(p.stdout)
    assert len(out["M"]) == 6 and out["e"].startswith("y[")


def test_monomials_from_stdin():
    tabs = json.loads(run("tableaux", *RUN).stdout)
    p = run("monomials", *RUN, "--tableau", "-", stdin=json.dumps(tabs[0]))
    assert p.returncode == 0
    assert json.loads(p.stdout)["M"]


def test_delta_symbolic():
    p = run("--format", "text", "delta", *SMALL, "--A", "symbolic")
    assert p.returncode == 0
    assert "a[1,1]" in p.stdout and "b[1,1]" in p.stdout


def test_delta_coefficient_and_json_terms():
    p = run("delta", *SMALL, "--index", "0")
    data = json.loads(p.stdout)
    assert set(data) == {"terms"}
    assert sorted(t["c"] for t in data["terms"]) == ["-1", "1"]


def test_delta_ty():
    p = run("--format", "text", "delta-ty", *SMALL, "--index", "0")
    assert p.returncode == 0
    assert "y[2,1]" in p.stdout and "x[" not in p.stdout


def test_verify_all():
    p = run("verify", *SMALL, "--all")
    out = json.loads(p.stdout)
    assert out["pass"] and out["rank"] == 1
    assert p.returncode == 0


def test_oracle_cmd():
    p = run("oracle", *RUN)
    assert json.loads(p.stdout) == {"oracle_count": 4}


def test_sl4_table_cmd():
    p = run("sl4-table")
    assert p.returncode == 0
    out = json.loads(p.stdout)
    assert len(out) == 18 and all(r["pass"] for r in out)


def test_bz_grade_dots():
    p = run("bz-grade", "--dots", "x21,z12,y11,y22,x13")
    out = json.loads(p.stdout)
    assert out == {"D": [2, 1, 1], "E": [1, 1, 0], "F": [1, 1, 0],
                   "hexagon": True}


def test_bz_grade_stdin_assignment():
    p = run("bz-grade", "--assignment", "-", stdin=json.dumps({"x11": 1}))
    out = json.loads(p.stdout)
    assert out["D"] == [1, 1, 1] and out["F"] == [1, 1, 1]


def test_domain_error_exit_1():
    p = run("count", "--D", "2", "--E", "1", "--F", "2")
    assert p.returncode == 1
    err = json.loads(p.stderr)
    assert err["error"] == "SizeMismatch"


def test_usage_error_exit_2():
    p = run("count", "--D", "1")
    assert p.returncode == 2


def test_threads_flag_accepted():
    p = run("--threads", "4", "count", *SMALL)
    assert p.returncode == 0
