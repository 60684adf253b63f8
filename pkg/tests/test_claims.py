from time import sleep
from uuid import uuid4

import pytest
import sqlalchemy as sa

from lie_kring import suites  # noqa: F401
from lie_kring.claims import (
    SUITES,
    ClaimLogger,
    ClaimRecord,
    ClaimStep,
    Report,
    RunOptions,
    claim,
    run_step,
    run_suites,
)
from lie_kring.common import Verdict, compare
from lie_kring.db import claim_errors_table, claim_runs_table, get_engine
from lie_kring.errors import LieKringError


def _step(func, **kwargs) -> ClaimStep:
    return ClaimStep(name=str(uuid4()), location="§0", suite="test", func=func, **kwargs)


def test_failed_record_has_witness():
    record = ClaimRecord(id="x", paper_location="§0", verdict="fail")
    assert record.witness == "(no witness)"
    verdict = Verdict(claim="x", location="§0", passed=False, dump="1 * (0)")
    assert verdict.witness == "1 * (0)"


def test_compare():
    assert compare("x", "§0", 2, 2).passed
    failed = compare("x", "§0", {"a": 1}, {"a": 2})
    assert not failed.passed
    assert failed.witness == "computed {'a': 1}, expected {'a': 2}"


def test_report_json_round_trip():
    report = Report(
        claims=[
            ClaimRecord(id="a", paper_location="§1", verdict="pass", runtime_ms=3),
            ClaimRecord(id="b", paper_location="§2", verdict="fail", witness="1 * (0)"),
            ClaimRecord(id="c", paper_location="§3", verdict="skipped", note="slow"),
        ]
    )
    assert Report.model_validate_json(report.model_dump_json()) == report
    assert report.exit_code == 1
    assert report.counts() == {"pass": 1, "fail": 1, "skipped": 1}


def test_verdicts_become_records():
    step = _step(
        lambda options: [
            Verdict(claim="one", location="§1", passed=True, note="ok"),
            Verdict(claim="two", location="§2", passed=False, witness="bad", dump="full"),
        ]
    )
    result = run_step(step, RunOptions())
    one, two = result.report.claims
    assert (one.id, one.verdict, one.note) == ("one", "pass", "ok")
    assert (two.id, two.verdict, two.witness) == ("two", "fail", "bad")
    assert result.dumps == {"two": "full"}


def test_exception_becomes_failure():
    def broken(options):
        raise LieKringError("no such weight")

    step = _step(broken)
    (record,) = run_step(step, RunOptions()).report.claims
    assert record.id == step.name
    assert record.verdict == "fail"
    assert record.witness == "LieKringError: no such weight"
    query = sa.select(claim_errors_table).where(claim_errors_table.c.claim_id == step.name)
    with get_engine().begin() as conn:
        errors = list(conn.execute(query).fetchall())
    assert len(errors) == 1
    assert all(v is not None for v in errors[0])


def test_timeout_becomes_failure():
    def slow(options):
        sleep(3)
        return Verdict(claim="late", location="§0", passed=True)

    step = _step(slow, timeout=0.5)
    (record,) = run_step(step, RunOptions()).report.claims
    assert record.verdict == "fail"
    assert record.witness.startswith("TimeoutError")


@pytest.mark.parametrize("allow_slow", [True, False])
def test_slow_step(allow_slow):
    step = _step(lambda options: Verdict(claim="fast-enough", location="§0", passed=True), slow=True)
    (record,) = run_step(step, RunOptions(allow_slow=allow_slow)).report.claims
    if allow_slow:
        assert record.verdict == "pass"
    else:
        assert record.verdict == "skipped"
        assert record.id == step.name


def test_claim_logger_start_finish():
    claim_logger = ClaimLogger(str(uuid4()))
    claim_logger.on_claim_start()
    claim_logger.on_claim_finish("pass", 12)
    query = sa.select(claim_runs_table).where(claim_runs_table.c.claim_id == claim_logger.name)
    with get_engine().begin() as conn:
        runs = list(conn.execute(query).fetchall())
    assert len(runs) == 1
    # no columns should be null.
    assert all(v is not None for v in runs[0])


def test_claim_logger_disabled():
    claim_logger = ClaimLogger(str(uuid4()), record=False)
    claim_logger.on_claim_start()
    claim_logger.on_claim_error(ValueError("x"))
    claim_logger.on_claim_finish("fail", 0)
    query = sa.select(claim_runs_table).where(claim_runs_table.c.claim_id == claim_logger.name)
    with get_engine().begin() as conn:
        assert conn.execute(query).fetchall() == []
    assert len(claim_logger.errors) == 1


def test_unknown_suite():
    with pytest.raises(LieKringError):
        run_suites(["nope"])


def test_duplicate_claim_ids(monkeypatch):
    name = f"test-{uuid4()}"
    monkeypatch.setitem(SUITES, name, [])
    for _ in range(2):
        claim(f"step-{uuid4()}", "§0", suite=name)(
            lambda options: Verdict(claim="same", location="§0", passed=True)
        )
    with pytest.raises(LieKringError):
        run_suites([name])


def test_run_is_deterministic():
    first = run_suites(["table2"], record=False).report
    second = run_suites(["table2"], record=False).report
    assert first.without_runtimes() == second.without_runtimes()
    ids = [c.id for c in first.claims]
    assert ids == sorted(ids)
    assert {"lemma-4.1", "table-2", "table-2-rowwise", "clifford-relation"} <= set(ids)
    assert first.exit_code == 0


def test_suites_registered():
    assert set(suites.SUITE_NAMES) <= set(SUITES)
    assert all(SUITES[name] for name in suites.SUITE_NAMES)


def test_props_suite():
    report = run_suites(["props"], RunOptions(seed=3, property_cases=10), record=False).report
    assert [c.id for c in report.claims if c.verdict != "pass"] == []
