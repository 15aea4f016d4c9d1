"""
CalculationService - The single computations behind `compute ...`, `enumerate zn`,
`bound schreier` and `coset-enum`, returned as JSON-ready dictionaries.
"""

import logging
from typing import Dict, Optional

from modbraid.algebra.braid_words import parse_word
from modbraid.algebra.burau_level import burau_matrix
from modbraid.algebra.chain_cohomology import cocycle_via_section, format_cell, kappa, parse_cell, phi
from modbraid.algebra.coset_enumeration import todd_coxeter, enumerate_Zn
from modbraid.algebra.ext_groups import (
    GN, ZN, RingTag, bar_cocycle, elem_from_word, schreier_bound, zn_order,
)
from modbraid.algebra.perm_core import format_permutation, parse_permutation
from modbraid.algebra.presentations import build_builtin_presentation, load_presentation

logger = logging.getLogger(__name__)


def _ring(name: str, t: int = 1) -> RingTag:
    if name == "z2":
        return ZN
    return RingTag.integers(t) if t != 1 else GN


class CalculationService:
    """Handles the one-shot computations of the command line."""

    @staticmethod
    def compute_phi(cell_text: str, n: int) -> Dict:
        """
        Returns:
            {cell, n, value} with value the nonzero pair coefficients, e.g. {"1,3": 1}
        """
        cell = parse_cell(cell_text)
        return {"cell": format_cell(cell), "n": n, "value": phi(cell, n).to_json()}

    @staticmethod
    def compute_kappa(cell_text: str, n: int) -> Dict:
        cell = parse_cell(cell_text)
        return {"cell": format_cell(cell), "n": n, "value": kappa(cell, n).to_json()}

    @staticmethod
    def compute_section_cocycle(cell_text: str, n: int, ring: str = "z", t: int = 1) -> Dict:
        """The section's cocycle pulled back to a 2-cell, for comparison with phi/kappa."""
        cell = parse_cell(cell_text)
        tag = _ring(ring, t)
        return {"cell": format_cell(cell), "n": n, "ring": str(tag),
                "value": cocycle_via_section(cell, n, tag).to_json()}

    @staticmethod
    def compute_cocycle(p_text: str, q_text: str, n: int, ring: str = "z", t: int = 1) -> Dict:
        p = parse_permutation(p_text, n)
        q = parse_permutation(q_text, n)
        tag = _ring(ring, t)
        return {"p": format_permutation(p), "q": format_permutation(q), "n": n, "ring": str(tag),
                "value": bar_cocycle(p, q, tag).to_json()}

    @staticmethod
    def compute_burau(word_text: str, n: int, m: int = 0) -> Dict:
        w = parse_word(word_text, n)
        matrix = burau_matrix(w, m)
        result = matrix.to_json()
        result.update({"word": str(w), "identity": matrix.is_identity()})
        return result

    @staticmethod
    def compute_element(word_text: str, n: int, ring: str = "z") -> Dict:
        """Image of a braid word in G_n or Z_n."""
        w = parse_word(word_text, n)
        element = elem_from_word(w, _ring(ring))
        result = element.to_json()
        result.update({"word": str(w), "n": n})
        return result

    @staticmethod
    def enumerate_zn(n: int, max_n: Optional[int] = None) -> Dict:
        order = enumerate_Zn(n, max_n)
        return {"n": n, "order": order, "expected": zn_order(n), "pass": order == zn_order(n)}

    @staticmethod
    def schreier(n: int) -> Dict:
        """Number of Schreier generators of B_n[4] from its index in B_n."""
        return {"n": n, "index": zn_order(n), "bound": schreier_bound(n)}

    @staticmethod
    def coset_enumeration(builtin: Optional[str] = None, path: Optional[str] = None, n: int = 3,
                          t: int = 1, limit: Optional[int] = None) -> Dict:
        """
        Enumerate a builtin presentation at degree n, or one read from a file.
        """
        if path is not None:
            pres = load_presentation(path)
        else:
            pres = build_builtin_presentation(builtin, n, t)
        table = todd_coxeter(pres, limit)
        result = table.to_json()
        result.update({"presentation": pres.name, "relators": len(pres.relators)})
        if builtin is not None:
            result["n"] = n
        return result
