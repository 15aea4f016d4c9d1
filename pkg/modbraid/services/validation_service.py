"""
ValidationService - Checks every user-supplied argument before the CLI calls
into the algebra package.

Each method returns (is_valid, message) and never raises; the message is empty on
success and comes from the message catalog otherwise.
"""

from typing import Optional, Tuple

from modbraid.algebra.braid_words import parse_word
from modbraid.algebra.chain_cohomology import parse_cell
from modbraid.algebra.perm_core import parse_permutation
from modbraid.algebra.presentations import BUILTINS
from modbraid.errors import ModbraidError
from modbraid.i18n.translations import T


class ValidationService:
    """Handles validation of degrees, scales, moduli and the text forms the CLI accepts."""

    # Ranges
    DEGREE_MIN, DEGREE_MAX = 1, 12
    SCALE_MIN = 1
    MODULUS_MIN = 0

    @staticmethod
    def validate_degree(n: int, minimum: int = DEGREE_MIN, maximum: int = DEGREE_MAX) -> Tuple[bool, str]:
        """
        Validate the number of strands.

        Returns:
            Tuple: (is_valid, error_message)
        """
        if not isinstance(n, int) or isinstance(n, bool):
            return False, T("validation.degree_not_integer", "Degree must be an integer")
        if n < minimum or n > maximum:
            return False, T("validation.degree_range", f"Degree must be between {minimum} and {maximum}",
                            min=minimum, max=maximum)
        return True, ""

    @staticmethod
    def validate_scale(t: int, even: bool = False) -> Tuple[bool, str]:
        """
        Validate the cocycle scale t; the splitting suite additionally needs t even.
        """
        if not isinstance(t, int) or isinstance(t, bool) or t < ValidationService.SCALE_MIN:
            return False, T("validation.scale_positive", "Scale t must be a positive integer")
        if even and t % 2:
            return False, T("validation.scale_even", f"Scale t must be even, got {t}", t=t)
        return True, ""

    @staticmethod
    def validate_modulus(m: int) -> Tuple[bool, str]:
        if not isinstance(m, int) or isinstance(m, bool) or m < ValidationService.MODULUS_MIN:
            return False, T("validation.modulus_range", "Modulus must be 0 (integers) or positive")
        return True, ""

    @staticmethod
    def validate_limit(limit: Optional[int]) -> Tuple[bool, str]:
        if limit is None:
            return True, ""
        if not isinstance(limit, int) or limit < 1:
            return False, T("validation.limit_positive", "Coset limit must be a positive integer")
        return True, ""

    @staticmethod
    def validate_permutation(text: str, n: int) -> Tuple[bool, str]:
        """
        Validate "[2,3,1]" or "s(i,j)" text against degree n.
        """
        if not text or not text.strip():
            return False, T("validation.permutation_empty", "Permutation cannot be empty")
        try:
            parse_permutation(text, n)
        except ModbraidError as e:
            return False, T("validation.permutation_invalid", f"Invalid permutation: {e}", error=str(e))
        return True, ""

    @staticmethod
    def validate_cell(text: str, n: int) -> Tuple[bool, str]:
        """
        Validate a 2-cell "c:i,j", "d:i,j,k,l" or "e:i,k,j" whose indices fit in degree n.
        """
        if not text or not text.strip():
            return False, T("validation.cell_empty", "Cell cannot be empty")
        try:
            cell = parse_cell(text)
        except ModbraidError as e:
            return False, T("validation.cell_invalid", f"Invalid cell: {e}", error=str(e))
        if cell.degree > n:
            return False, T("validation.cell_degree", f"Cell {text} needs at least {cell.degree} strands",
                            cell=text.strip(), degree=cell.degree)
        return True, ""

    @staticmethod
    def validate_word(text: str, n: int) -> Tuple[bool, str]:
        try:
            parse_word(text, n)
        except ModbraidError as e:
            return False, T("validation.word_invalid", f"Invalid braid word: {e}", error=str(e))
        return True, ""

    @staticmethod
    def validate_builtin(name: str) -> Tuple[bool, str]:
        if name not in BUILTINS:
            return False, T("validation.builtin_unknown", f"Unknown presentation {name}",
                            name=name, choices=", ".join(BUILTINS))
        return True, ""
