import csv
import json

import pytest

from instances.instances import read_dataset, write_dataset
from rank_app import main
from tests.helpers import unanimous_dataset

SMALL_SEARCH = ["--max-gens", "3", "--pop-size", "4", "--max-iters", "100", "--time-limit", "30"]


@pytest.fixture
def unanimous_file(tmp_path):
    path = tmp_path / "unanimous.txt"
    write_dataset(unanimous_dataset((3, 1, 4, 2), n=5), path)
    return path


@pytest.fixture
def generated_dir(tmp_path):
    out = tmp_path / "instances"
    assert main(["generate", "--m", "5,6", "--theta", "0.3", "--n", "6", "--count", "2", "--seed", "4",
                 "--out", str(out)]) == 0
    return out


def solve_json(capsys, argv: list[str]) -> dict:
    assert main(argv) == 0
    return json.loads(capsys.readouterr().out)


# =============================================================================
# GENERATE / PARTIALIZE
# =============================================================================

def test_generate_writes_named_instances(generated_dir):
    names = sorted(p.name for p in generated_dir.iterdir())
    assert names == ["MM5n0.300_01.txt", "MM5n0.300_02.txt", "MM6n0.300_01.txt", "MM6n0.300_02.txt"]
    text = (generated_dir / "MM5n0.300_01.txt").read_text()
    assert text.startswith("# m=5 n=6\n# generator=mallows theta=0.300 center=identity seed=")
    d = read_dataset(generated_dir / "MM6n0.300_02.txt")
    assert (d.m, d.n) == (6, 6)
    assert d.complete_flag


def test_generate_is_byte_reproducible(tmp_path, generated_dir):
    again = tmp_path / "again"
    assert main(["generate", "--m", "5,6", "--theta", "0.3", "--n", "6", "--count", "2", "--seed", "4",
                 "--out", str(again)]) == 0
    for path in generated_dir.iterdir():
        assert (again / path.name).read_bytes() == path.read_bytes()


@pytest.mark.parametrize("theta", ["0", "-1.5"])
def test_generate_rejects_non_positive_theta(tmp_path, theta):
    assert main(["generate", "--m", "5", "--theta", theta, "--out", str(tmp_path)]) == 2


def test_generate_rejects_bad_list(tmp_path):
    assert main(["generate", "--m", "5,x", "--theta", "0.1", "--out", str(tmp_path)]) == 2


def test_partialize_without_changes(tmp_path, generated_dir):
    source = generated_dir / "MM5n0.300_01.txt"
    target = tmp_path / "same.txt"
    assert main(["partialize", str(source), "--p-d", "0", "--p-k", "0", "--out", str(target)]) == 0
    assert read_dataset(target).rankings == read_dataset(source).rankings
    assert "partialized from=MM5n0.300_01.txt" in target.read_text()


def test_partialize_defaults_produce_partial_rankings(tmp_path, generated_dir):
    target = tmp_path / "partial.txt"
    assert main(["partialize", str(generated_dir / "MM6n0.300_01.txt"), "--seed", "2", "--out", str(target)]) == 0
    d = read_dataset(target)
    assert d.n == 6
    assert not d.complete_flag


def test_partialize_rejects_malformed_input(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("# m=3 n=1\n1|2|2\n")
    assert main(["partialize", str(bad), "--out", str(tmp_path / "out.txt")]) == 2


def test_partialize_rejects_probability(tmp_path, generated_dir):
    source = generated_dir / "MM5n0.300_01.txt"
    assert main(["partialize", str(source), "--p-d", "1.0", "--out", str(tmp_path / "out.txt")]) == 2


# =============================================================================
# SOLVE / EVAL
# =============================================================================

def test_solve_borda_on_unanimous_input(capsys, unanimous_file):
    payload = solve_json(capsys, ["solve", str(unanimous_file), "--algo", "borda"])
    assert payload["best_ranking"] == "3|1|4|2"
    assert payload["fitness"] == "0.000"
    assert payload["fitness_sum"] == 0
    assert (payload["m"], payload["n"]) == (4, 5)
    assert payload["instance"] == str(unanimous_file)


def test_solve_her_is_reproducible(capsys, generated_dir):
    argv = ["solve", str(generated_dir / "MM6n0.300_01.txt"), "--seed", "1", *SMALL_SEARCH]
    first = solve_json(capsys, argv)
    second = solve_json(capsys, argv)
    for payload in (first, second):
        payload.pop("elapsed_ms")
        payload.pop("time_to_best_ms")
    assert first == second
    assert first["algorithm"] == "her"
    assert first["params"]["pop_size"] == 4


def test_solve_writes_trace(tmp_path, capsys, generated_dir):
    trace = tmp_path / "trace.csv"
    solve_json(capsys, ["solve", str(generated_dir / "MM6n0.300_01.txt"), "--algo", "lads", "--seed", "3",
                        "--trace-every", "10", "--trace", str(trace), *SMALL_SEARCH])
    rows = list(csv.reader(trace.open()))
    assert rows[0] == ["iteration", "current_sum", "best_sum"]
    assert len(rows) > 1
    assert all(int(row[0]) % 10 == 0 for row in rows[1:])


def test_solve_unknown_algorithm(unanimous_file):
    assert main(["solve", str(unanimous_file), "--algo", "tabu"]) == 2


def test_solve_invalid_parameter(unanimous_file):
    assert main(["solve", str(unanimous_file), "--beta", "0.7"]) == 2


def test_solve_missing_file(tmp_path):
    assert main(["solve", str(tmp_path / "nowhere.txt")]) == 1


def test_eval_identity_on_unanimous_input(capsys, unanimous_file):
    payload = solve_json(capsys, ["eval", str(unanimous_file), "3|1|4|2"])
    assert payload == {"fitness_sum": 0, "fitness": "0.000"}


def test_eval_partial_rankings(tmp_path, capsys):
    path = tmp_path / "partial.txt"
    path.write_text("# m=4 n=3\n1|2|3|4\n4|3,2\n2|1\n")
    # 1|2|3|4 disagrees with (4,2) and (4,3); the 3,2 tie counts nothing; (2,1) adds one
    payload = solve_json(capsys, ["eval", str(path), "1|2|3|4"])
    assert payload == {"fitness_sum": 3, "fitness": "1.000"}


def test_eval_rejects_non_permutation(unanimous_file):
    assert main(["eval", str(unanimous_file), "3|1,4|2"]) == 2
    assert main(["eval", str(unanimous_file), "3|1|4"]) == 2


# =============================================================================
# BENCH
# =============================================================================

def test_bench_writes_csv_and_summary(tmp_path, capsys, generated_dir):
    out = tmp_path / "bench.csv"
    assert main(["bench", str(generated_dir), "--algos", "borda,lads", "--seeds", "1,2",
                 "--out", str(out), *SMALL_SEARCH]) == 0
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["instance", "algorithm", "seed", "fitness", "fitness_sum", "elapsed_ms",
                       "iterations", "generations"]
    assert len(rows) == 1 + 4 * 2 * 2
    summary = capsys.readouterr().out.splitlines()
    assert summary[0].split()[:2] == ["group", "algorithm"]
    assert [line.split()[:2] for line in summary[1:]] == [
        ["MM5n0.300", "borda"], ["MM5n0.300", "lads"], ["MM6n0.300", "borda"], ["MM6n0.300", "lads"],
    ]


def test_bench_is_independent_of_jobs(tmp_path, generated_dir):
    outputs = []
    for jobs in ("1", "2"):
        out = tmp_path / f"bench{jobs}.csv"
        assert main(["bench", str(generated_dir), "--algos", "her", "--seeds", "1,2", "--jobs", jobs,
                     "--out", str(out), *SMALL_SEARCH]) == 0
        rows = list(csv.reader(out.open()))
        elapsed = rows[0].index("elapsed_ms")
        outputs.append([row[:elapsed] + row[elapsed + 1:] for row in rows])
    assert outputs[0] == outputs[1]


def test_bench_stores_results(tmp_path, generated_dir):
    from sqlalchemy import create_engine, text

    db = tmp_path / "bench.db"
    assert main(["bench", str(generated_dir), "--algos", "borda", "--out", str(tmp_path / "b.csv"),
                 "--store", f"sqlite:///{db}", *SMALL_SEARCH]) == 0
    engine = create_engine(f"sqlite:///{db}")
    with engine.connect() as conn:
        assert conn.execute(text('SELECT COUNT(*) FROM "BenchRun"')).scalar() == 4
    engine.dispose()


def test_bench_unknown_algorithm(tmp_path, generated_dir):
    assert main(["bench", str(generated_dir), "--algos", "her,tabu", "--out", str(tmp_path / "b.csv")]) == 2


def test_bench_empty_directory(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    assert main(["bench", str(empty), "--out", str(tmp_path / "b.csv")]) == 2


def test_bench_reports_failed_runs(tmp_path, generated_dir):
    (generated_dir / "broken.txt").write_text("# m=3 n=1\n1|2|2\n")
    out = tmp_path / "bench.csv"
    assert main(["bench", str(generated_dir), "--algos", "borda", "--out", str(out), *SMALL_SEARCH]) == 1
    rows = list(csv.reader(out.open()))
    broken = [row for row in rows if row[0] == "broken.txt"]
    assert broken == [["broken.txt", "borda", "1", "", "", "", "", ""]]


def test_missing_command():
    assert main([]) == 2
