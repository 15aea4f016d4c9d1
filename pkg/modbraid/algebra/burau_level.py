"""
Unreduced Burau representation at t = -1, over Z (m = 0) or reduced mod m, and
membership in the level-m congruence subgroup B_n[m].

Matrices hold Python integers (numpy object arrays), so m = 0 arithmetic is exact.
The matrix of a word is the product of its letters' matrices in word order.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

import numpy as np

from modbraid.algebra.braid_words import BraidWord, artin_expand

# ρ(b_i) block (1-t, t; 1, 0) at t = -1, and its exact inverse
_BLOCK = ((2, -1), (1, 0))
_BLOCK_INV = ((0, 1), (-1, 2))


@dataclass(frozen=True)
class SquareMatrixModM:
    """n×n integer matrix; entries lie in [0, m) when m > 0."""

    n: int
    m: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"modulus must be non-negative, got {self.m}")
        rows = tuple(tuple(int(x) % self.m if self.m else int(x) for x in row) for row in self.entries)
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise ValueError(f"expected a {self.n}x{self.n} matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_array(cls, array: np.ndarray, m: int) -> "SquareMatrixModM":
        return cls(array.shape[0], m, tuple(tuple(row) for row in array.tolist()))

    def to_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=object).reshape(self.n, self.n)

    def is_identity(self) -> bool:
        return all(
            value == (1 % self.m if self.m else 1) if r == c else value == 0
            for r, row in enumerate(self.entries)
            for c, value in enumerate(row)
        )

    def __matmul__(self, other: "SquareMatrixModM") -> "SquareMatrixModM":
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError("matrix shape or modulus mismatch")
        return SquareMatrixModM.from_array(_reduce(self.to_array().dot(other.to_array()), self.m), self.m)

    def to_json(self) -> Dict:
        return {"n": self.n, "m": self.m, "rows": [list(row) for row in self.entries]}


def _reduce(array: np.ndarray, m: int) -> np.ndarray:
    return array % m if m else array


def _identity(n: int) -> np.ndarray:
    array = np.zeros((n, n), dtype=object)
    for k in range(n):
        array[k, k] = 1
    return array


@lru_cache(maxsize=None)
def _generator(i: int, n: int, exponent: int) -> np.ndarray:
    array = _identity(n)
    block = _BLOCK if exponent == 1 else _BLOCK_INV
    for r in range(2):
        for c in range(2):
            array[i - 1 + r, i - 1 + c] = block[r][c]
    array.setflags(write=False)
    return array


def burau_generator(i: int, n: int, m: int = 0, exponent: int = 1) -> SquareMatrixModM:
    """ρ(b_i^±1) at t = -1: I_{i-1} ⊕ block ⊕ I_{n-i-1}."""
    if not 1 <= i < n:
        raise ValueError(f"Artin index {i} out of range for B_{n}")
    return SquareMatrixModM.from_array(_reduce(_generator(i, n, exponent), m), m)


def burau_matrix(w: BraidWord, m: int = 0) -> SquareMatrixModM:
    """
    Image of w under B_n → GL_n(Z_m) (GL_n(Z) when m = 0).
    """
    if m < 0:
        raise ValueError(f"modulus must be non-negative, got {m}")
    result = _identity(w.n)
    for letter in artin_expand(w).letters:
        result = _reduce(result.dot(_generator(letter.index, w.n, letter.exponent)), m)
    return SquareMatrixModM.from_array(_reduce(result, m), m)


def in_level(w: BraidWord, m: int) -> bool:
    """True iff w lies in B_n[m], the kernel of burau_matrix(·, m)."""
    return burau_matrix(w, m).is_identity()



def level_of_generators(words: Iterable[BraidWord], m: int) -> List[bool]:
    """in_level(w, m) for each word, in order."""
    return [in_level(w, m) for w in words]
