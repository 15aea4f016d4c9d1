"""
TranslationService - Message catalog for CLI output and validation messages.

Features:
- Lazy loading: catalogs are read once from the i18n/ folder
- Flexible language detection: every *.json file next to this module is a language
- Missing key logging: debug mode reports keys the catalog lacks
- Fallback: missing keys return the default passed by the caller
"""

import json
import os
import logging
from typing import Any, Dict

logger = logging.getLogger(__name__)


class TranslationService:
    """Catalog lookup with caching; one process-wide current language."""

    _current_language = "en"
    _translations: Dict[str, Dict[str, Any]] = {}
    _is_loaded = False
    _debug_mode = False
    _missing_keys: set = set()

    @classmethod
    def initialize(cls, language: str = "en", debug: bool = False):
        """
        Load the catalogs (once) and select a language.

        Args:
            language: Language code, "en" unless more catalogs are added
            debug: If True, logs missing catalog keys

        Raises:
            ValueError: If language not found and 'en' not available
        """
        cls._debug_mode = debug

        if not cls._is_loaded:
            cls._load_translations()
            cls._is_loaded = True

        if language in cls._translations:
            cls._current_language = language
            logger.debug(f"Language set to: {language}")
        elif "en" in cls._translations:
            cls._current_language = "en"
            logger.warning(
                f"Language '{language}' not found. "
                f"Available: {list(cls._translations.keys())}. Using 'en'"
            )
        else:
            raise ValueError(
                f"Language '{language}' not found and 'en' not available. "
                f"Available languages: {list(cls._translations.keys())}"
            )

    @classmethod
    def _load_translations(cls):
        i18n_dir = os.path.dirname(__file__)
        json_files = sorted(f for f in os.listdir(i18n_dir) if f.endswith(".json"))
        if not json_files:
            logger.warning("No catalog files found in i18n directory")
            return

        for filename in json_files:
            lang = filename[:-len(".json")]
            file_path = os.path.join(i18n_dir, filename)
            try:
                with open(file_path, "r", encoding="utf-8") as f:
                    cls._translations[lang] = json.load(f)
            except json.JSONDecodeError as e:
                logger.error(f"Invalid JSON in {file_path}: {e}")
            except OSError as e:
                logger.error(f"Error loading {file_path}: {e}")
        logger.debug(f"Loaded catalogs: {', '.join(cls._translations)}")

    @classmethod
    def get(cls, key: str, default: str = "", **kwargs) -> str:
        """
        Look up a dotted key and fill its {placeholders} from kwargs.

        Examples:
            T("report.summary", passed=10, total=12)
            T("validation.degree_range", min=1, max=8)
        """
        if not cls._is_loaded:
            cls.initialize(cls._current_language)

        value: Any = cls._translations.get(cls._current_language, {})
        for k in key.split("."):
            value = value.get(k) if isinstance(value, dict) else None
            if value is None:
                if key not in cls._missing_keys:
                    cls._missing_keys.add(key)
                    if cls._debug_mode:
                        logger.warning(f"Missing catalog key '{key}' in language '{cls._current_language}'")
                result = default
                break
        else:
            result = value if isinstance(value, str) else default

        if kwargs and isinstance(result, str):
            try:
                result = result.format(**kwargs)
            except (KeyError, IndexError) as e:
                logger.warning(f"Missing placeholder in catalog entry '{key}': {e}")
        return result

    @classmethod
    def set_language(cls, language: str):
        """
        Raises:
            ValueError: If language not available
        """
        if not cls._is_loaded:
            cls.initialize(language)
            return
        if language not in cls._translations:
            error_msg = f"Language '{language}' not available. Available: {list(cls._translations)}"
            logger.error(error_msg)
            raise ValueError(error_msg)
        cls._current_language = language

    @classmethod
    def get_current_language(cls) -> str:
        return cls._current_language

    @classmethod
    def get_available_languages(cls) -> list:
        if not cls._is_loaded:
            cls.initialize(cls._current_language)
        return list(cls._translations.keys())

    @classmethod
    def missing_keys(cls) -> set:
        """Keys looked up so far that the current catalog does not define."""
        return set(cls._missing_keys)

    @classmethod
    def all_keys(cls, language: str = "en") -> set:
        """Every dotted key of one catalog."""
        if not cls._is_loaded:
            cls.initialize(language)
        return cls._get_all_keys(cls._translations.get(language, {}))

    @classmethod
    def _get_all_keys(cls, obj: dict, prefix: str = "") -> set:
        """Recursively get all dot-notation keys from nested dict."""
        keys = set()
        for k, v in obj.items():
            full_key = f"{prefix}.{k}" if prefix else k
            if isinstance(v, dict):
                keys.update(cls._get_all_keys(v, full_key))
            else:
                keys.add(full_key)
        return keys


def T(key: str, default: str = "", **kwargs) -> str:
    """
    Shorthand for TranslationService.get()

    Usage:
        T("cli.order", order=48)
    """
    return TranslationService.get(key, default, **kwargs)
