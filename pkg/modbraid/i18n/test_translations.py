"""
Message catalog checks:
1. The English catalog loads and is the default
2. Every key the package looks up exists in the catalog
3. Placeholders are filled from keyword arguments
4. Missing keys fall back to the caller's default
"""

import re
from pathlib import Path

import pytest

from modbraid.i18n.translations import T, TranslationService

PACKAGE = Path(__file__).resolve().parent.parent
LOOKUP = re.compile(r"""(?:\bT|TranslationService\.get)\(\s*["']([a-z_.]+)["']""")


@pytest.fixture(autouse=True)
def english():
    TranslationService.initialize("en", debug=True)
    yield
    TranslationService.set_language("en")


def used_keys():
    keys = set()
    for path in PACKAGE.rglob("*.py"):
        if path.name.startswith("test_"):
            continue
        keys.update(LOOKUP.findall(path.read_text(encoding="utf-8")))
    return keys


def test_initialization():
    assert TranslationService.get_current_language() == "en"
    assert "en" in TranslationService.get_available_languages()


def test_every_used_key_is_in_the_catalog():
    keys = used_keys()
    assert "cli.order" in keys
    missing = keys - TranslationService.all_keys("en")
    assert not missing, sorted(missing)


def test_placeholders_are_filled():
    assert T("cli.order", order=48) == "order: 48"
    assert T("validation.degree_range", min=1, max=12) == "Degree must be between 1 and 12"


def test_missing_key_returns_default():
    assert T("nonexistent.key", "DEFAULT_VALUE") == "DEFAULT_VALUE"
    assert "nonexistent.key" in TranslationService.missing_keys()


def test_unknown_language_is_rejected():
    with pytest.raises(ValueError):
        TranslationService.set_language("xx")


def test_unknown_language_on_initialize_falls_back_to_english():
    TranslationService.initialize("xx")
    assert TranslationService.get_current_language() == "en"
