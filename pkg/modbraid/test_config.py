import pytest

from modbraid import config
from modbraid.config import Settings, get_settings
from modbraid.errors import ConfigError


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("MODBRAID_COSET_LIMIT", "MODBRAID_SEARCH_MAX_N", "MODBRAID_ORACLE_LENGTH",
                 "MODBRAID_LOG_LEVEL", "MODBRAID_LANGUAGE"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr(config, "_settings", None)
    return monkeypatch


def test_defaults(clean_env):
    settings = Settings.load()
    assert settings == Settings()
    assert settings.coset_limit == 1_000_000 and settings.search_max_n == 4


def test_environment_overrides(clean_env):
    clean_env.setenv("MODBRAID_COSET_LIMIT", " 5000 ")
    clean_env.setenv("MODBRAID_LOG_LEVEL", "debug")
    settings = Settings.load()
    assert settings.coset_limit == 5000
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize("name,value", [
    ("MODBRAID_COSET_LIMIT", "lots"),
    ("MODBRAID_COSET_LIMIT", "0"),
    ("MODBRAID_SEARCH_MAX_N", "-1"),
])
def test_bad_values_raise(clean_env, name, value):
    clean_env.setenv(name, value)
    with pytest.raises(ConfigError):
        Settings.load()


def test_oracle_length_may_be_zero(clean_env):
    clean_env.setenv("MODBRAID_ORACLE_LENGTH", "0")
    assert Settings.load().oracle_length == 0


def test_get_settings_is_cached(clean_env):
    assert get_settings() is get_settings()


def test_overrides_leave_original_untouched():
    settings = Settings()
    changed = settings.with_overrides(coset_limit=10)
    assert changed.coset_limit == 10
    assert settings.coset_limit == 1_000_000
    assert settings.with_overrides() == settings
