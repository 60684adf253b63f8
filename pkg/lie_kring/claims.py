from collections import defaultdict
from dataclasses import dataclass, field
from datetime import datetime, timezone
from logging import Logger
from time import perf_counter
from typing import Callable, Dict, List, Literal, Optional, Sequence, Union

import sqlalchemy as sa
from func_timeout import func_timeout
from func_timeout.exceptions import FunctionTimedOut
from pydantic import BaseModel, Field

from lie_kring import REPORT_VERSION
from lie_kring import logger as default_logger

from .common import Verdict
from .config import config
from .db import claim_errors_table, claim_runs_table, get_engine
from .errors import LieKringError

VerdictName = Literal["pass", "fail", "skipped"]


class ClaimRecord(BaseModel):
    id: str
    paper_location: str
    verdict: VerdictName
    witness: Optional[str] = None
    note: Optional[str] = None
    runtime_ms: int = 0

    def model_post_init(self, __context) -> None:
        if self.verdict == "fail" and not self.witness:
            self.witness = "(no witness)"


class Report(BaseModel):
    version: str = REPORT_VERSION
    claims: List[ClaimRecord] = []

    @property
    def failed(self) -> List[ClaimRecord]:
        return [c for c in self.claims if c.verdict == "fail"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def counts(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for c in self.claims:
            counts[c.verdict] += 1
        return counts

    def without_runtimes(self) -> "Report":
        return Report(
            version=self.version,
            claims=[c.model_copy(update={"runtime_ms": 0}) for c in self.claims],
        )


class RunOptions(BaseModel):
    seed: int = 0
    allow_slow: bool = False
    property_cases: int = Field(default_factory=lambda: config.property_cases)


ClaimFunc = Callable[[RunOptions], Union[Verdict, List[Verdict]]]


@dataclass
class ClaimStep:
    """A unit of verification producing one or more verdicts."""

    name: str
    location: str
    suite: str
    func: ClaimFunc
    # only run with allow_slow.
    slow: bool = False
    timeout: Optional[float] = None

    def __call__(self, options: Optional[RunOptions] = None) -> List[Verdict]:
        result = self.func(options or RunOptions())
        return [result] if isinstance(result, Verdict) else list(result)


# suite name -> steps, in registration order.
SUITES: Dict[str, List[ClaimStep]] = defaultdict(list)


def claim(
    name: str,
    location: str,
    suite: str,
    slow: bool = False,
    timeout: Optional[float] = None,
):
    """Decorator for claim functions.

    Args:
        name (str): Step name. Used as the claim id when the step raises or is skipped.
        location (str): Where the claim is stated.
        suite (str): CLI suite the step belongs to.
        slow (bool, optional): Skip unless the run allows slow claims. Defaults to False.
        timeout (Optional[float], optional): Seconds allowed. Defaults to `config.claim_timeout`.
    """

    def claim_decorator(func: ClaimFunc) -> ClaimStep:
        step = ClaimStep(
            name=name, location=location, suite=suite, func=func, slow=slow, timeout=timeout
        )
        SUITES[suite].append(step)
        return step

    return claim_decorator


class ClaimLogger:
    """Records claim runs and errors in the run ledger."""

    def __init__(self, name: str, record: Optional[bool] = None):
        self.name = name
        self.record = config.record_runs if record is None else record
        self.errors = []

    def on_claim_start(self):
        self.start_time = datetime.now(timezone.utc)
        if not self.record:
            return
        with get_engine().begin() as conn:
            conn.execute(
                sa.insert(claim_runs_table).values(
                    claim_id=self.name, started=self.start_time
                )
            )

    def on_claim_error(self, error: Exception):
        self.errors.append(error)
        if not self.record:
            return
        with get_engine().begin() as conn:
            conn.execute(
                sa.insert(claim_errors_table).values(
                    claim_id=self.name,
                    type=str(type(error)),
                    message=str(error),
                )
            )

    def on_claim_finish(self, verdict: VerdictName, runtime_ms: int):
        if not self.record:
            return
        with get_engine().begin() as conn:
            conn.execute(
                sa.update(claim_runs_table)
                .where(
                    claim_runs_table.c.claim_id == self.name,
                    claim_runs_table.c.started == self.start_time,
                )
                .values(
                    finished=datetime.now(timezone.utc),
                    verdict=verdict,
                    runtime_ms=runtime_ms,
                )
            )


@dataclass
class RunResult:
    report: Report
    # claim id -> canonical text of the computed object.
    dumps: Dict[str, str] = field(default_factory=dict)


def _overall(records: Sequence[ClaimRecord]) -> VerdictName:
    return "fail" if any(r.verdict == "fail" for r in records) else "pass"


def run_step(
    step: ClaimStep,
    options: RunOptions,
    logger: Optional[Logger] = None,
    record: Optional[bool] = None,
) -> RunResult:
    logger = logger or default_logger
    if step.slow and not options.allow_slow:
        logger.warning("Skipping %s (slow; enable with --allow-slow).", step.name)
        skipped = ClaimRecord(
            id=step.name,
            paper_location=step.location,
            verdict="skipped",
            note="slow claim, run with --allow-slow",
        )
        return RunResult(Report(claims=[skipped]))
    claim_logger = ClaimLogger(step.name, record=record)
    claim_logger.on_claim_start()
    logger.info("Checking %s.", step.name)
    timeout = step.timeout if step.timeout is not None else config.claim_timeout
    start = perf_counter()
    exp = None
    try:
        if timeout:
            # throws FunctionTimedOut if timeout is exceeded.
            verdicts = func_timeout(timeout, step.__call__, args=(options,))
        else:
            verdicts = step(options)
    except FunctionTimedOut as e:
        exp = TimeoutError(e.msg)
    except Exception as e:
        exp = e
    runtime_ms = int((perf_counter() - start) * 1000)
    if exp is not None:
        logger.exception("Error checking %s: (%s) -- %s", step.name, type(exp), exp)
        claim_logger.on_claim_error(exp)
        failed = ClaimRecord(
            id=step.name,
            paper_location=step.location,
            verdict="fail",
            witness=f"{type(exp).__name__}: {exp}",
            runtime_ms=runtime_ms,
        )
        claim_logger.on_claim_finish("fail", runtime_ms)
        return RunResult(Report(claims=[failed]))
    result = RunResult(Report())
    for v in verdicts:
        if not v.passed:
            logger.error("Claim %s failed: %s", v.claim, (v.witness or "")[:500])
        result.report.claims.append(
            ClaimRecord(
                id=v.claim,
                paper_location=v.location,
                verdict="pass" if v.passed else "fail",
                witness=v.witness,
                note=v.note,
                runtime_ms=runtime_ms,
            )
        )
        if v.dump is not None:
            result.dumps[v.claim] = v.dump
    claim_logger.on_claim_finish(_overall(result.report.claims), runtime_ms)
    return result


def run_suites(
    suites: Sequence[str],
    options: Optional[RunOptions] = None,
    record: Optional[bool] = None,
) -> RunResult:
    """Run every step of the named suites. Claims are sorted by id."""
    options = options or RunOptions()
    records: Dict[str, ClaimRecord] = {}
    dumps: Dict[str, str] = {}
    for suite in suites:
        if suite not in SUITES:
            raise LieKringError(f"Unknown suite: {suite}")
        default_logger.info("Running suite %s.", suite)
        for step in SUITES[suite]:
            result = run_step(step, options, record=record)
            for rec in result.report.claims:
                if rec.id in records:
                    raise LieKringError(f"Duplicate claim id {rec.id}")
                records[rec.id] = rec
            dumps.update(result.dumps)
    report = Report(claims=[records[k] for k in sorted(records)])
    counts = report.counts()
    default_logger.info(
        "%d passed, %d failed, %d skipped.", counts["pass"], counts["fail"], counts["skipped"]
    )
    return RunResult(report, dumps)
