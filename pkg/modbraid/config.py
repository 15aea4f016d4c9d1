import os
import logging
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

from modbraid.errors import ConfigError

logger = logging.getLogger(__name__)

# 1. Load Environment Variables
# Searches for a .env file and loads the variables inside it. Variables already
# present in the process environment win over the file.
load_dotenv()


def _int_setting(name: str, default: int, minimum: int = 1) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw.strip())
    except ValueError:
        raise ConfigError(f"'{name}' must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"'{name}' must be at least {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """
    Process-wide settings.

    Loaded from the environment (and .env) once; CLI flags override individual
    fields through with_overrides().
    """

    coset_limit: int = 1_000_000
    search_max_n: int = 4
    oracle_length: int = 8
    log_level: str = "WARNING"
    language: str = "en"

    @classmethod
    def load(cls) -> "Settings":
        settings = cls(
            coset_limit=_int_setting("MODBRAID_COSET_LIMIT", cls.coset_limit),
            search_max_n=_int_setting("MODBRAID_SEARCH_MAX_N", cls.search_max_n),
            oracle_length=_int_setting("MODBRAID_ORACLE_LENGTH", cls.oracle_length, minimum=0),
            log_level=(os.getenv("MODBRAID_LOG_LEVEL") or cls.log_level).upper(),
            language=os.getenv("MODBRAID_LANGUAGE") or cls.language,
        )
        logger.debug(f"Loaded settings: {settings}")
        return settings

    def with_overrides(self, coset_limit: Optional[int] = None,
                       log_level: Optional[str] = None) -> "Settings":
        changes = {}
        if coset_limit is not None:
            changes["coset_limit"] = coset_limit
        if log_level is not None:
            changes["log_level"] = log_level
        return replace(self, **changes)


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    Return the cached process settings, loading them on first use.
    """
    global _settings
    if _settings is None:
        _settings = Settings.load()
    return _settings
