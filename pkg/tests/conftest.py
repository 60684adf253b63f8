import pytest

from lie_kring.config import config
from lie_kring.lie.charcalc import spin10_characters
from lie_kring.lie.rootdata import RootSystemKind, build_root_system


def pytest_addoption(parser):
    parser.addoption(
        "--db-url",
        action="store",
        help="SQLAlchemy URL of the run ledger used for testing. Defaults to a temporary SQLite file.",
    )


@pytest.fixture(autouse=True)
def ledger_db(monkeypatch, request, tmp_path):
    """Point the run ledger at a throwaway database."""
    db_url = request.config.getoption("--db-url") or f"sqlite:///{tmp_path}/lie_kring_test.sqlite"
    monkeypatch.setattr(config, "db_url", db_url)
    return db_url


@pytest.fixture(scope="session")
def e8():
    return build_root_system(RootSystemKind.E8)


@pytest.fixture(scope="session")
def e6():
    return build_root_system(RootSystemKind.E6)


@pytest.fixture(scope="session")
def d5():
    return build_root_system(RootSystemKind.D5)


@pytest.fixture(scope="session")
def blocks():
    """D5 characters 1, lambda1..lambda4, delta+ and delta-."""
    return spin10_characters()
