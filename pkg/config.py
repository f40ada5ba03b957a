"""
regtool configuration loader.

Priority:
1. Command-line flags (per invocation, applied by app.py)
2. Environment variables
3. Defaults
"""

import os
from dataclasses import dataclass, field, fields
from pathlib import Path


class ConfigurationError(ValueError):
    """Raised when regtool configuration is invalid."""


CENSUS_DEFAULT_CEILING = 8
CENSUS_EXTENDED_CEILING = 10


@dataclass
class RuntimeConfig:
    threads: int = field(default_factory=lambda: os.cpu_count() or 1)


@dataclass
class CensusConfig:
    max_n: int = 8
    ceiling: int = CENSUS_DEFAULT_CEILING  # 10 with REGTOOL_ALLOW_N10
    pair_product_limit: int = 36  # n1 * n2 bound for product sweeps
    join_sum_limit: int = 12  # n1 + n2 bound for join sweeps


@dataclass
class DatabaseConfig:
    url: str = "sqlite+aiosqlite:///regtool.db"
    echo: bool = False


@dataclass
class LoggingConfig:
    level: str = "WARNING"
    format: str = "[%(asctime)s] %(levelname)s %(name)s: %(message)s"


def _int_env(name: str, default: int, minimum: int) -> int:
    raw = os.getenv(name, "")
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}") from None
    if value < minimum:
        raise ConfigurationError(f"{name} must be at least {minimum}, got {value}")
    return value


def _bool_env(name: str, default: bool) -> bool:
    raw = os.getenv(name, "").strip().lower()
    if not raw:
        return default
    if raw in {"1", "true", "yes", "on"}:
        return True
    if raw in {"0", "false", "no", "off"}:
        return False
    raise ConfigurationError(f"{name} must be a boolean (true/false), got {raw!r}")


@dataclass
class Config:
    runtime: RuntimeConfig = field(default_factory=RuntimeConfig)
    census: CensusConfig = field(default_factory=CensusConfig)
    database: DatabaseConfig = field(default_factory=DatabaseConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    data_dir: Path = field(default_factory=lambda: Path("data"))

    def __post_init__(self):
        self.data_dir = Path(self.data_dir).resolve()

    @classmethod
    def load(cls) -> "Config":
        """Load config from environment variables with sensible defaults."""
        cfg = cls()

        cfg.data_dir = Path(os.getenv("REGTOOL_DATA_DIR", "data")).resolve()

        # Runtime
        cfg.runtime.threads = _int_env("REGTOOL_THREADS", cfg.runtime.threads, 1)

        # Census
        allow_n10 = _bool_env("REGTOOL_ALLOW_N10", False)
        cfg.census.ceiling = CENSUS_EXTENDED_CEILING if allow_n10 else CENSUS_DEFAULT_CEILING
        cfg.census.max_n = _int_env("REGTOOL_CENSUS_MAX_N", cfg.census.max_n, 1)
        if cfg.census.max_n > cfg.census.ceiling:
            raise ConfigurationError(
                f"REGTOOL_CENSUS_MAX_N must be at most {cfg.census.ceiling}, "
                f"got {cfg.census.max_n} (set REGTOOL_ALLOW_N10=true for up to 10)"
            )
        cfg.census.pair_product_limit = _int_env(
            "REGTOOL_PAIR_PRODUCT_LIMIT", cfg.census.pair_product_limit, 1
        )
        cfg.census.join_sum_limit = _int_env("REGTOOL_JOIN_SUM_LIMIT", cfg.census.join_sum_limit, 2)

        # Database
        cfg.database.url = os.getenv("REGTOOL_DATABASE_URL", cfg.database.url)
        cfg.database.echo = _bool_env("REGTOOL_DATABASE_ECHO", False)

        # Logging
        cfg.logging.level = os.getenv("REGTOOL_LOG_LEVEL", cfg.logging.level).upper()

        return cfg


def _load_or_defaults() -> Config:
    try:
        return Config.load()
    except ConfigurationError:
        # app.main() calls reload_config() and reports the error
        return Config()


config = _load_or_defaults()


def reload_config() -> Config:
    """Re-read the environment into the shared ``config`` instance."""
    fresh = Config.load()
    for f in fields(Config):
        setattr(config, f.name, getattr(fresh, f.name))
    return config
