"""
Pytest configuration for regtool.
"""

import pytest


@pytest.fixture(autouse=True)
def setup_test_env(monkeypatch, tmp_path):
    """Set up test environment variables and config overrides."""
    db_path = tmp_path / "test_regtool.db"
    monkeypatch.setenv("REGTOOL_DATABASE_URL", f"sqlite+aiosqlite:///{db_path}")
    monkeypatch.setenv("REGTOOL_LOG_LEVEL", "ERROR")
    monkeypatch.setenv("REGTOOL_DATA_DIR", str(tmp_path))
    monkeypatch.setenv("REGTOOL_THREADS", "1")
    for name in ("REGTOOL_ALLOW_N10", "REGTOOL_CENSUS_MAX_N"):
        monkeypatch.delenv(name, raising=False)

    # Directly update the config singleton
    import config as cfg

    monkeypatch.setattr(cfg.config.database, "url", f"sqlite+aiosqlite:///{db_path}")
    monkeypatch.setattr(cfg.config, "data_dir", tmp_path)
    monkeypatch.setattr(cfg.config.logging, "level", "ERROR")
    monkeypatch.setattr(cfg.config.runtime, "threads", 1)
    monkeypatch.setattr(cfg.config.census, "max_n", 8)
    monkeypatch.setattr(cfg.config.census, "ceiling", cfg.CENSUS_DEFAULT_CEILING)
    monkeypatch.setattr(cfg.config.census, "pair_product_limit", 36)
    monkeypatch.setattr(cfg.config.census, "join_sum_limit", 12)

    # Reset the database engine singleton so it picks up the new config
    import database.engine

    database.engine._engine = None
    database.engine._session_factory = None
    yield
    database.engine._engine = None
    database.engine._session_factory = None


@pytest.fixture(scope="function")
async def db():
    """Initialize test database and tear down after."""
    from database.engine import close_db, init_db

    await init_db()
    yield
    await close_db()
