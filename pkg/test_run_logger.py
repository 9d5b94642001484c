import json

from hallshell.run_logger import RunLogger, log_run


def test_log_run_drops_none_values(tmp_path):
    logger = RunLogger(str(tmp_path / "logs" / "runs.jsonl"))

    assert logger.log_run("marriage", 0, inputs={"family": {"n": 1, "members": [[1]]}}, summary="true")

    lines = (tmp_path / "logs" / "runs.jsonl").read_text(encoding="utf-8").splitlines()
    entry = json.loads(lines[0])
    assert entry["command"] == "marriage"
    assert entry["exit_code"] == 0
    assert "error" not in entry
    assert "elapsed" not in entry


def test_history_filters_and_limits(tmp_path):
    logger = RunLogger(str(tmp_path / "runs.jsonl"))
    logger.log_run("marriage", 0)
    logger.log_run("shellable", 1)
    logger.log_run("marriage", 2, error="bad JSON")

    assert len(logger.get_history()) == 3
    assert len(logger.get_history(limit=2)) == 2
    assert {e["exit_code"] for e in logger.get_history(command="marriage")} == {0, 2}
    assert logger.get_history(since="9999") == []


def test_history_skips_corrupt_lines(tmp_path):
    path = tmp_path / "runs.jsonl"
    logger = RunLogger(str(path))
    logger.log_run("marriage", 0)
    with open(path, "a", encoding="utf-8") as f:
        f.write("not json\n\n")

    assert len(logger.get_history()) == 1


def test_stats_and_search(tmp_path):
    logger = RunLogger(str(tmp_path / "runs.jsonl"))
    assert logger.get_stats()["total_runs"] == 0

    logger.log_run("count average", 0, inputs={"m": 16}, summary="20074070016/5")
    logger.log_run("count average", 2, error="hypothesis violated: family is shellable")
    logger.log_run("verify", 0)

    stats = logger.get_stats()
    assert stats["total_runs"] == 3
    assert stats["by_command"] == {"count average": 2, "verify": 1}
    assert stats["by_exit_code"] == {"0": 2, "2": 1}

    assert len(logger.search("SHELLABLE")) == 1
    assert len(logger.search('"m": 16')) == 1


def test_clear_history_and_module_helper(tmp_path):
    path = tmp_path / "runs.jsonl"
    assert log_run("marriage", 0, log_file=str(path), summary="true")
    assert path.exists()

    logger = RunLogger(str(path))
    assert logger.clear_history()
    assert not path.exists()
    assert logger.get_history() == []
