import json
import subprocess
import sys

import pytest

from slopesight.cli import main

PAIR = '{"points":[["0","0"],["1","1"]]}'
ROW = '{"points":[["0","0"],["1","0"],["2","0"]]}'


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err

    return _run


@pytest.fixture
def pair_file(tmp_path):
    p = tmp_path / "pair.json"
    p.write_text(PAIR)
    return p


@pytest.fixture
def row_file(tmp_path):
    p = tmp_path / "row.json"
    p.write_text(ROW)
    return p


def test_tiers(run):
    code, out, _ = run("tiers", "--upto", 3)
    assert code == 0
    assert out.splitlines() == ["1\t0", "1\tvertical", "2\t1", "2\t-1",
                                "3\t1/2", "3\t-2", "3\t2", "3\t-1/2"]


def test_census_table_row(run):
    code, out, _ = run("census", "--n", 2, "--format", "table")
    assert code == 0
    assert "2 | 4 | 2:2 3:2" in out.splitlines()


def test_census_three_reports_table_deviation(run):
    code, out, _ = run("census", "--n", 3, "--format", "table")
    assert code == 0
    lines = out.splitlines()
    assert "3 | 24 | 2:2 3:14 4:8" in lines
    assert "n=3: nophantom semantics gives 2:2 3:9 4:13" in lines
    assert sum(1 for l in lines if "unique=3 nophantom=4" in l) == 5


def test_census_nophantom_table_row(run):
    code, out, _ = run("census", "--n", 3, "--semantics", "nophantom")
    assert "3 | 24 | 2:2 3:9 4:13" in out.splitlines()


def test_census_json(run):
    code, out, _ = run("census", "--n", 4, "--format", "json")
    doc = json.loads(out)
    assert doc["total_examples"] == 196
    assert doc["histogram"] == {"2": 3, "3": 62, "4": 121, "5": 10}
    assert doc["table_check"]["matches"] is False
    assert doc["table_check"]["other_semantics_histogram"] == {"2": 3, "3": 25, "4": 102, "5": 66}


def test_census_jobs_do_not_change_bytes(run, monkeypatch):
    _, serial, _ = run("census", "--n", 4, "--format", "json", "--jobs", 1)
    _, parallel, _ = run("census", "--n", 4, "--format", "json", "--jobs", 3)
    monkeypatch.setenv("SLOPESIGHT_JOBS", "2")
    _, from_env, _ = run("census", "--n", 4, "--format", "json")
    assert serial == parallel == from_env


def test_census_custom_order(run, tmp_path):
    order = tmp_path / "order.json"
    order.write_text('{"slopes":["vertical","0","-1","1"]}')
    code, out, _ = run("census", "--n", 2, 3, "--order", order, "--format", "json")
    assert code == 0
    docs = json.loads(out)
    assert [d["total_examples"] for d in docs] == [4, 24]
    assert all("table_check" not in d for d in docs)


def test_observe_row(run, row_file):
    code, out, _ = run("observe", "--config", row_file, "--slopes", "0,vertical")
    assert code == 0
    doc = json.loads(out)
    assert [len(e["lines"]) for e in doc["entries"]] == [1, 3]
    assert doc["entries"][1]["slope"] == "vertical"


def test_observe_then_solve(run, pair_file, tmp_path):
    obs = tmp_path / "obs.json"
    assert run("observe", "--config", pair_file, "--tiered", 2, "-o", obs)[0] == 0
    code, out, _ = run("solve", "--observation", obs, "--n", 2)
    assert code == 0
    doc = json.loads(out)
    assert doc["verdict"] == "ambiguous" and doc["exhaustive"] and len(doc["configurations"]) == 2
    assert run("solve", "--observation", obs, "--n", 2, "--expect-unique")[0] == 3

    assert run("observe", "--config", pair_file, "--tiered", 3, "-o", obs)[0] == 0
    code, out, _ = run("solve", "--observation", obs, "--n", 2, "--expect-unique")
    assert code == 0
    assert json.loads(out) == {"verdict": "unique", "configurations": [[["0", "0"], ["1", "1"]]],
                               "exhaustive": True}


def test_solve_nophantom(run, pair_file, tmp_path):
    obs = tmp_path / "obs.json"
    run("observe", "--config", pair_file, "--tiered", 2, "-o", obs)
    code, out, _ = run("solve", "--observation", obs, "--n", 2, "--semantics", "nophantom",
                       "--truth", pair_file)
    doc = json.loads(out)
    assert doc["phantoms"] == [["0", "1"], ["1", "0"]]
    assert run("solve", "--observation", obs, "--n", 2, "--semantics", "nophantom")[0] == 2


def test_solve_limit(run, tmp_path):
    cfg = tmp_path / "diag.json"
    cfg.write_text('{"points":[["0","0"],["1","1"],["2","2"]]}')
    obs = tmp_path / "obs.json"
    run("observe", "--config", cfg, "--slopes", "0,vertical", "-o", obs)
    doc = json.loads(run("solve", "--observation", obs, "--n", 3)[1])
    assert doc["count"] == 6
    doc = json.loads(run("solve", "--observation", obs, "--n", 3, "--limit", 2)[1])
    assert doc["exhaustive"] is False and doc["count"] is None


def test_search(run, pair_file):
    code, out, _ = run("search", "--hidden", pair_file)
    doc = json.loads(out)
    assert code == 0 and doc["slopes_used"] == 3
    assert doc["configuration"] == [["0", "0"], ["1", "1"]]


def test_adversarial(run):
    code, out, _ = run("adversarial", "--n", 4, "--center", "1/2,-1")
    doc = json.loads(out)
    assert code == 0
    assert doc["phantom_at_center"] is True
    assert doc["center"] == ["1/2", "-1"]
    assert doc["verdict_with_n_plus_1"]["verdict"] == "unique"
    assert doc["required_slopes_nophantom"] == 5


def test_transform(run, pair_file):
    code, out, _ = run("transform", "--config", pair_file, "--op", "rot90", "--slopes", "1/2,vertical")
    doc = json.loads(out)
    assert doc == {"points": [["-1", "1"], ["0", "0"]], "slopes": ["-2", "0"]}
    code, out, _ = run("transform", "--config", pair_file, "--op", "reflect-h", "--center", "0,1")
    assert json.loads(out)["points"] == [["0", "2"], ["1", "1"]]


def test_invalid_inputs_exit_2(run, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"points":[["0","0"],["0/1","0"]]}')
    code, _, err = run("observe", "--config", bad, "--slopes", "0,1")
    assert code == 2 and "duplicate" in err and len(err.strip().splitlines()) == 1
    bad.write_text('{"points": [')
    code, _, err = run("observe", "--config", bad, "--slopes", "0,1")
    assert code == 2 and "line 1" in err
    assert run("observe", "--config", tmp_path / "missing.json", "--slopes", "0")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["census"],
        ["census", "--n", "0"],
        ["census", "--n", "3", "--bogus"],
        ["tiers", "--upto", "x"],
        ["observe", "--config", "c.json", "--slopes", "1/0"],
        ["transform", "--config", "c.json", "--op", "spin"],
        ["solve", "--observation", "o.json", "--n", "2", "--semantics", "maybe"],
        [],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_repeated_runs_are_byte_identical(run, pair_file):
    outs = {run("adversarial", "--n", 5)[1] for _ in range(3)}
    outs2 = {run("search", "--hidden", pair_file)[1] for _ in range(3)}
    assert len(outs) == 1 and len(outs2) == 1


def test_output_file_is_written_whole(run, tmp_path):
    target = tmp_path / "report.json"
    target.write_text("stale")
    assert run("census", "--n", 2, "--format", "json", "-o", target)[0] == 0
    assert json.loads(target.read_text())["total_examples"] == 4
    assert [p.name for p in tmp_path.iterdir()] == ["report.json"]


def test_module_entry_point(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(PAIR)
    res = subprocess.run(
        [sys.executable, "-m", "slopesight", "search", "--hidden", str(cfg)],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(res.stdout)["slopes_used"] == 3


def test_stdin_input(run, monkeypatch):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(PAIR))
    code, out, _ = run("observe", "--config", "-", "--slopes", "1")
    assert json.loads(out)["entries"][0]["lines"] == [{"m": "1", "b": "0"}]
