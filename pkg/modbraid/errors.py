"""
Exception hierarchy shared by the algebra package, the services and the CLI.

Domain errors raise; user-input validation at the CLI boundary goes through
ValidationService and returns (is_valid, message) tuples instead.
"""

from typing import Optional


class ModbraidError(Exception):
    """Base class for every error raised by modbraid."""


class ConfigError(ModbraidError, ValueError):
    """An environment setting could not be interpreted."""


class DegreeMismatch(ModbraidError, ValueError):
    """Two objects that must share a degree do not."""

    def __init__(self, left: int, right: int):
        super().__init__(f"degree mismatch: {left} != {right}")
        self.left = left
        self.right = right


class RingMismatch(ModbraidError, ValueError):
    """Two extension elements live over different coefficient rings."""


class NotPure(ModbraidError, ValueError):
    """A winding vector was requested for a braid with nontrivial permutation."""


class OddCrossing(ModbraidError, ArithmeticError):
    """A pure braid produced an odd signed crossing count (internal inconsistency)."""


class UnsupportedScale(ModbraidError, ValueError):
    """G_n^t with t > 1 is not a quotient of the braid group."""


class OddScale(ModbraidError, ValueError):
    """The splitting map only exists for even scale t."""


class SearchSpaceTooLarge(ModbraidError, ValueError):
    """An exhaustive search or enumeration was asked for beyond its guard."""


class MissingCoverage(ModbraidError, ValueError):
    """Extension-presentation data does not cover every required generator or relator."""


class EnumerationAborted(ModbraidError, RuntimeError):
    """Coset enumeration exceeded its coset limit."""

    def __init__(self, limit: int):
        super().__init__(f"coset enumeration aborted: more than {limit} cosets")
        self.limit = limit


class ParseError(ModbraidError, ValueError):
    """Text could not be parsed; carries the 1-based line and column when known."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line
        self.column = column
