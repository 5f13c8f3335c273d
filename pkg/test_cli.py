"""
Test the command-line driver: exit codes, kv / table output, the run
history and the admissibility failure path
"""

import pytest

from app import EXIT_CAPPED, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, RunJob, main, run_job
from engine import EngineConfig
from models import RunRecord
from ideals import parse_ideal_file, render_ideal_file

EXAMPLE = """\
ring: x,y,z
char: 0
order: grevlex
poly: y*z - x
poly: x*z - y
poly: x*y - z
"""


def kv_blocks(text):
    """Split kv output into one dict per run."""
    blocks = []
    for chunk in text.strip().split("\n\n"):
        blocks.append(dict(line.split("=", 1) for line in chunk.splitlines()))
    return blocks


@pytest.fixture
def example_file(tmp_path):
    path = tmp_path / "example.ideal"
    path.write_text(EXAMPLE)
    return path


def test_cyclic3_verified(capsys):
    code = main(["--bench", "cyclic:3", "--verify", "--samples", "100"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    run, = kv_blocks(out)
    assert run["input"] == "cyclic3" and run["char"] == "32003"
    assert run["reduced_gb_size"] == "3"
    assert run["outcome"] == "complete"
    assert run["verify_groebner"] == run["verify_oracle"] == run["verify_syzygies"] == "pass"
    assert run["verify"] == "pass"


def test_kv_key_order(capsys):
    main(["--bench", "cyclic:3"])
    keys = [line.split("=")[0] for line in capsys.readouterr().out.strip().splitlines()]
    assert keys == ["input", "char", "order", "module_order", "rewrite_order", "strategy",
                    "all_pairs", "reduced_pairs", "nonzero_generators", "syzygy_signatures",
                    "reduced_gb_size", "time_ms", "outcome"]


def test_input_file_over_rationals(capsys, example_file):
    code = main(["--input", str(example_file), "--char", "0", "--verify", "--samples", "100",
                 "--module-order", "schreyer", "--rewrite-order", "gvw"])
    run, = kv_blocks(capsys.readouterr().out)
    assert code == EXIT_OK
    assert run["input"] == "example.ideal" and run["char"] == "0"
    assert run["reduced_gb_size"] == "6" and run["verify"] == "pass"
    assert int(run["reduced_pairs"]) <= int(run["all_pairs"])


@pytest.mark.parametrize("argv", [
    ["--input", "does/not/exist.ideal"],
    ["--bench", "katsura:3", "--no-such-flag"],
    ["--bench", "katsura:3", "--module-order", "top"],
    ["--bench", "noether:3"],
    ["--bench", "katsura:3", "--char", "4"],
    ["--bench", "katsura:3", "--jobs", "0"],
    [],
])
def test_usage_and_parse_errors(capsys, argv):
    assert main(argv) == EXIT_USAGE
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("poly, message", [
    ("x - x", "generator is zero"),
    ("0", "generator is zero"),
    ("x^70000", "exponent 70000 exceeds"),
    ("(x^40000)^2", "exceeds 65535"),
])
def test_bad_generator_exits_with_diagnostic(capsys, tmp_path, poly, message):
    path = tmp_path / "bad.ideal"
    path.write_text(f"ring: x,y\nchar: 0\norder: grevlex\npoly: y\npoly: {poly}\n")
    assert main(["--input", str(path)]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "line 5" in err and message in err


def test_generator_vanishing_mod_p_fails_the_run(capsys, tmp_path):
    path = tmp_path / "vanish.ideal"
    path.write_text("ring: x,y\nchar: 0\norder: grevlex\npoly: y\npoly: 32003*x\n")
    assert main(["--input", str(path), "--bench", "cyclic:3"]) == EXIT_USAGE
    vanished, cyclic = kv_blocks(capsys.readouterr().out)
    assert vanished["outcome"] == "failed"
    assert cyclic["outcome"] == "complete" and cyclic["reduced_gb_size"] == "3"

    result = run_job(RunJob("vanish", path.read_text(), EngineConfig(characteristic=32003)))
    assert result.exit_code == EXIT_USAGE
    assert result.record.outcome == "failed" and "is zero" in result.error


def test_parse_error_reports_line(capsys, tmp_path):
    path = tmp_path / "bad.ideal"
    path.write_text("ring: x,y\nchar: 0\norder: grevlex\npoly: x + w\n")
    assert main(["--input", str(path)]) == EXIT_USAGE
    assert "line 4" in capsys.readouterr().err


def test_pair_cap_exit_code(capsys):
    code = main(["--bench", "katsura:3", "--max-pairs", "1"])
    run, = kv_blocks(capsys.readouterr().out)
    assert code == EXIT_CAPPED
    assert run["outcome"] == "capped" and run["reduced_gb_size"] == "-1"


def test_degree_cap_exit_code(capsys):
    assert main(["--bench", "cyclic:4", "--max-degree", "2"]) == EXIT_CAPPED


def test_output_is_deterministic_apart_from_time(capsys):
    def run():
        main(["--bench", "katsura:3", "--strategy", "degree"])
        return [{k: v for k, v in b.items() if k != "time_ms"} for b in kv_blocks(capsys.readouterr().out)]

    assert run() == run()


def test_strategy_all_prints_one_block_per_strategy(capsys):
    assert main(["--bench", "cyclic:3", "--strategy", "all"]) == EXIT_OK
    blocks = kv_blocks(capsys.readouterr().out)
    assert [b["strategy"] for b in blocks] == ["sig", "degree"]
    assert {b["reduced_gb_size"] for b in blocks} == {"3"}


def test_worker_processes_give_same_counters(capsys):
    argv = ["--bench", "cyclic:3", "--bench", "katsura:2", "--strategy", "all"]
    main(argv)
    serial = kv_blocks(capsys.readouterr().out)
    main(argv + ["--jobs", "2"])
    parallel = kv_blocks(capsys.readouterr().out)
    for a, b in zip(serial, parallel, strict=True):
        a.pop("time_ms"), b.pop("time_ms")
        assert a == b


def test_table_format(capsys):
    assert main(["--bench", "cyclic:3", "--stats-format", "table"]) == EXIT_OK
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split()[:4] == ["input", "module", "rewrite", "strategy"]
    assert set(lines[1]) <= {"-", " "}
    assert lines[2].startswith("cyclic3")


def test_record_and_history(capsys, history_db):
    assert main(["--history", "5"]) == EXIT_OK
    assert "No recorded runs." in capsys.readouterr().out

    assert main(["--bench", "cyclic:3", "--strategy", "all", "--record"]) == EXIT_OK
    capsys.readouterr()
    assert main(["--history", "5"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("# run ") == 2
    assert "strategy=degree" in out and "strategy=sig" in out
    assert "input=cyclic3" in out

    latest = RunRecord.recent(1)[0]
    again = RunRecord.get_by_id(latest.id)
    assert again == latest
    assert RunRecord.get_by_id(latest.id + 100) is None

    assert main(["--bench", "katsura:2", "--record"]) == EXIT_OK
    capsys.readouterr()
    assert main(["--history", "5", "--history-label", "katsura2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.count("# run ") == 1 and "input=katsura2" in out
    assert [r.label for r in RunRecord.by_input("cyclic3")] == ["cyclic3", "cyclic3"]


def test_admissibility_failure_exit_code():
    text = render_ideal_file(parse_ideal_file(EXAMPLE))
    job = RunJob("example", text, EngineConfig(module_order="pot", rewrite_order="inverted", strategy="sig"))
    result = run_job(job)
    assert result.exit_code == EXIT_VERIFY
    assert result.record.outcome == "failed"
    assert "not admissible" in result.error


def test_run_job_record_is_consistent():
    text = render_ideal_file(parse_ideal_file(EXAMPLE))
    result = run_job(RunJob("example", text, EngineConfig(characteristic=0), verify=True, samples=50))
    assert result.exit_code == EXIT_OK
    assert result.record.is_consistent()
    assert result.record.reduced_gb_size == 6
    assert dict(result.verify_items)["verify"] == "pass"
