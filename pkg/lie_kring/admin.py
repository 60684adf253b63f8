import sys
from functools import lru_cache
from itertools import cycle
from typing import Sequence, Tuple

import click
import sqlalchemy as sa
from click.core import Group
from rich import box
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from . import suites  # noqa: F401 registers claim steps.
from .claims import Report, RunOptions, run_suites
from .db import claim_runs_table, get_engine
from .errors import LieKringError
from .kring.presentation import kring_presentation
from .kring.tangent import verify_tangent_class
from .lie.charcalc import table1_rows, table2_rows

cli = Group("lie-kring")

_VERDICT_STYLES = {"pass": "green", "fail": "bold red", "skipped": "yellow"}


def suite_options(func):
    func = click.option(
        "--allow-slow", is_flag=True, help="Run slow claims (the E8 Weyl group order)."
    )(func)
    func = click.option(
        "--seed", type=int, default=0, show_default=True, help="Seed for randomized claims."
    )(func)
    func = click.option(
        "--dump",
        "dump_ids",
        multiple=True,
        help="Print the computed object of this claim id in canonical text form.",
    )(func)
    func = click.option("--json", "as_json", is_flag=True, help="Print the JSON report only.")(func)
    return func


def run_and_report(
    names: Sequence[str],
    as_json: bool,
    dump_ids: Tuple[str, ...],
    seed: int,
    allow_slow: bool,
    extra=None,
):
    result = run_suites(names, RunOptions(seed=seed, allow_slow=allow_slow))
    report = result.report
    if as_json:
        click.echo(report.model_dump_json(indent=2))
    else:
        console = Console()
        if extra is not None:
            try:
                extra(console)
            except LieKringError as e:
                console.print(f"{type(e).__name__}: {e}", style="yellow", markup=False)
        print_report(console, report)
    for claim_id in dump_ids:
        if claim_id in result.dumps:
            click.echo(f"# {claim_id}")
            click.echo(result.dumps[claim_id])
        else:
            click.echo(click.style(f"No dump for claim {claim_id}.", fg="yellow"), err=True)
    sys.exit(report.exit_code)


def print_report(console: Console, report: Report):
    column_color = table_column_colors()
    table = Table(title="Claims", box=box.SIMPLE)
    for c in ("Claim", "Location", "Verdict", "Runtime (ms)", "Note"):
        table.add_column(c, style=column_color(c), justify="center")
    for rec in report.claims:
        style = _VERDICT_STYLES[rec.verdict]
        table.add_row(
            rec.id,
            rec.paper_location,
            f"[{style}]{rec.verdict}",
            str(rec.runtime_ms),
            escape(rec.note or ""),
        )
    console.print(table, justify="center")
    for rec in report.failed:
        console.rule(f"[bold red]{rec.id}")
        console.print(rec.witness, markup=False)
    counts = report.counts()
    console.print(
        f"{counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped."
    )


def print_table_1(console: Console):
    column_color = table_column_colors()
    table = Table(title="Table 1: E6 fundamental representations", box=box.SIMPLE)
    for c in ("Weight", "Coordinates", "Dimension"):
        table.add_column(c, style=column_color(c), justify="center")
    for row in table1_rows():
        table.add_row(row.weight, row.coords, str(row.dimension))
    console.print(table, justify="center")


def print_table_2(console: Console):
    column_color = table_column_colors()
    table = Table(title="Table 2: weights of Λ²(U2) and U4", box=box.SIMPLE)
    for c in ("Weight", "Number", "Mult. in Λ²(U2)", "Mult. in U4", "Mult. in U1⊗U3"):
        table.add_column(c, style=column_color(c), justify="center")
    for row in table2_rows():
        table.add_row(
            row.weight_type,
            str(row.count),
            str(row.mult_wedge2_u2),
            str(row.mult_u4),
            str(row.mult_u1_u3),
        )
    console.print(table, justify="center")


def print_tor(console: Console):
    presentation = kring_presentation()
    column_color = table_column_colors()
    table = Table(title="Koszul homology over B = Z[t]", box=box.SIMPLE)
    for c in ("Group", "Presentation", "Z-module", "Rank over Q"):
        table.add_column(c, style=column_color(c), justify="center")
    tor = presentation.tor
    for name, group in (("H0", tor.h0), ("H1", tor.h1), ("H2", tor.h2)):
        q_rank = "∞" if group.q_rank is None else str(group.q_rank)
        table.add_row(name, escape(str(group)), escape(str(group.z_module)), q_rank)
    console.print(table, justify="center")
    console.print(f"xbar = {tor.xbar}, ybar = {tor.ybar}", markup=False)
    console.print(presentation.summary(), style="bold cyan", markup=False)


def print_tangent(console: Console):
    report = verify_tangent_class()
    console.print(f"[tau] = {report.tau}", style="bold cyan", markup=False)
    console.print(f"dim M = {report.dim_m}")
    console.print(f"M immerses in R^{report.immersion_dimension} (cited)")
    console.print(f"M does not immerse in R^{report.non_immersion_bound} (cited)")
    for statement in report.cited:
        console.print(f"  - {statement}", style="dim")


@cli.command
@suite_options
def dims(as_json: bool, dump_ids: Tuple[str, ...], seed: int, allow_slow: bool):
    """Table 1, root data and Weyl group orders."""
    run_and_report(["dims"], as_json, dump_ids, seed, allow_slow, extra=print_table_1)


@cli.command
@suite_options
def table2(as_json: bool, dump_ids: Tuple[str, ...], seed: int, allow_slow: bool):
    """Lemma 4.1, Table 2 and the Clifford relation."""
    run_and_report(["table2"], as_json, dump_ids, seed, allow_slow, extra=print_table_2)


@cli.command
@suite_options
def branch(as_json: bool, dump_ids: Tuple[str, ...], seed: int, allow_slow: bool):
    """Restrictions from E8 and E6 to Spin(10)·S^1 and Proposition 3.2."""
    run_and_report(["branch"], as_json, dump_ids, seed, allow_slow)


@cli.command
@suite_options
def restrict(as_json: bool, dump_ids: Tuple[str, ...], seed: int, allow_slow: bool):
    """Proposition 4.2 and the graded exterior square formulas."""
    run_and_report(["restrict"], as_json, dump_ids, seed, allow_slow)


@cli.command
@suite_options
def tor(as_json: bool, dump_ids: Tuple[str, ...], seed: int, allow_slow: bool):
    """Lemma 5.2, the Koszul homology and Theorem 1.1."""
    run_and_report(["tor"], as_json, dump_ids, seed, allow_slow, extra=print_tor)


@cli.command
@suite_options
def tangent(as_json: bool, dump_ids: Tuple[str, ...], seed: int, allow_slow: bool):
    """The stable tangent class of E6/Spin(10)."""
    run_and_report(["tangent"], as_json, dump_ids, seed, allow_slow, extra=print_tangent)


@cli.command
@suite_options
def props(as_json: bool, dump_ids: Tuple[str, ...], seed: int, allow_slow: bool):
    """Seeded randomized properties of the character algebra."""
    run_and_report(["props"], as_json, dump_ids, seed, allow_slow)


@cli.command(name="all")
@suite_options
def run_all(as_json: bool, dump_ids: Tuple[str, ...], seed: int, allow_slow: bool):
    """Every suite."""
    run_and_report(suites.SUITE_NAMES, as_json, dump_ids, seed, allow_slow)


@cli.command
@click.option(
    "-l",
    "--limit",
    type=int,
    default=20,
    help="Number of most recent claim runs to show.",
)
@click.option("-m", "--match", help="Only show runs of claims matching this pattern.")
def history(limit: int, match: str = None):
    """Print claim run history to console display."""
    table = claim_runs_table
    console = Console()
    column_color = table_column_colors()
    query = sa.select(table).order_by(table.c.started.desc(), table.c.claim_id)
    if match:
        query = query.where(table.c.claim_id.like(f"%{match}%"))
    if limit:
        query = query.limit(limit)
    columns = [c.name.replace("_", " ").title() for c in table.columns]
    with get_engine().begin() as conn:
        rows = [dict(zip(columns, row)) for row in conn.execute(query).fetchall()]
    table = Table(title="Claim History", box=box.SIMPLE)
    for c in columns:
        table.add_column(c, style=column_color(c), justify="center")
    for row in rows:
        table.add_row(*[str(row[c]) for c in columns])
    console.print(table, justify="center")


def table_column_colors():
    colors_gen = cycle(
        [
            "cyan",
            "light_steel_blue",
            "orchid",
            "magenta",
            "dodger_blue1",
        ]
    )

    @lru_cache
    def column_color(col_name: str) -> str:
        return next(colors_gen)

    return column_color
