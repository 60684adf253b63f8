from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict

lie_kring_data_dir = Path.home() / ".lie_kring"


class Config(BaseSettings):
    """Engine configuration. Variables will be loaded from environment variables (prefix `LIE_KRING_`) or a `.env` file if set."""

    # run ledger database. defaults to a SQLite file in `lie_kring_data_dir`.
    db_url: Optional[str] = None
    # record claim runs in the ledger.
    record_runs: bool = True
    # seconds allowed per claim. None disables the timeout.
    claim_timeout: Optional[float] = 300
    # cases per randomized claim in the `props` suite.
    property_cases: int = 100
    # guard against non-terminating highest-weight peeling.
    decompose_max_iterations: int = 10_000
    # lattice truncation degree is 2 * max(relation degree) + truncation_padding.
    truncation_padding: int = 4

    model_config = SettingsConfigDict(env_prefix="lie_kring_", env_file=".env")


config = Config()
