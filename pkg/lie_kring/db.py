import re
from datetime import datetime, timezone
from functools import cache
from pathlib import Path

import sqlalchemy as sa

from lie_kring import logger
from lie_kring.config import config, lie_kring_data_dir

sa_meta = sa.MetaData()

claim_runs_table = sa.Table(
    "claim_runs",
    sa_meta,
    sa.Column("claim_id", sa.String, primary_key=True),
    sa.Column(
        "started",
        sa.DateTime(timezone=True),
        default=lambda: datetime.now(timezone.utc),
        primary_key=True,
    ),
    sa.Column("finished", sa.DateTime(timezone=True)),
    sa.Column("verdict", sa.String),
    sa.Column("runtime_ms", sa.Integer),
)

claim_errors_table = sa.Table(
    "claim_errors",
    sa_meta,
    sa.Column("claim_id", sa.String, primary_key=True),
    sa.Column(
        "time",
        sa.DateTime(timezone=True),
        default=lambda: datetime.now(timezone.utc),
        primary_key=True,
    ),
    sa.Column("type", sa.String),
    sa.Column("message", sa.String),
)


def db_url() -> str:
    if config.db_url:
        return config.db_url
    lie_kring_data_dir.mkdir(parents=True, exist_ok=True, mode=0o755)
    return f"sqlite:///{lie_kring_data_dir}/lie_kring.sqlite"


@cache
def engine_for(url: str) -> sa.Engine:
    dialect = re.search(r"^[a-z]+", url).group()
    if dialect == "sqlite" and url.startswith("sqlite:///"):
        Path(url.replace("sqlite:///", "")).parent.mkdir(parents=True, exist_ok=True)
    engine = sa.create_engine(url)
    logger.info("Using database: %s", url)
    with engine.begin() as conn:
        sa_meta.create_all(conn, checkfirst=True)
    return engine


def get_engine() -> sa.Engine:
    """Engine for the configured run ledger. Tables are created on first use."""
    return engine_for(db_url())
