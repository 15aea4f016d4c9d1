from modbraid.i18n.translations import TranslationService, T

__all__ = ["TranslationService", "T"]
