"""
Strand-diagram evaluation of braid words.

Signed crossings are attributed to the START labels of the two strands involved, so
for a pure braid half the crossing count between strands i and j is their winding
number, and the winding vector is the image of the braid in H_1(PB_n) = Z^(n choose 2).
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Tuple

from modbraid.algebra.braid_words import BraidWord, artin_expand, perm_of
from modbraid.algebra.perm_core import Permutation, UPair, all_pairs
from modbraid.errors import DegreeMismatch, NotPure, OddCrossing, RingMismatch

logger = logging.getLogger(__name__)

Z = "Z"
Z2 = "Z2"


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def pair_index(n: int, pair: UPair) -> int:
    """Position of pair in the lexicographic list all_pairs(n)."""
    lo, hi = pair.lo, pair.hi
    if hi > n:
        raise ValueError(f"pair {pair} out of range for degree {n}")
    return (lo - 1) * (2 * n - lo) // 2 + (hi - lo - 1)


@lru_cache(maxsize=None)
def _pairs(n: int) -> Tuple[UPair, ...]:
    return tuple(all_pairs(n))


@dataclass(frozen=True)
class PairVector:
    """
    Coefficients indexed by unordered pairs {i,j} ⊂ {1..n}, over Z or Z_2.

    values[k] is the coefficient of the k-th pair of all_pairs(n); absent pairs
    are zero. Over Z_2 every value is 0 or 1.
    """

    n: int
    values: Tuple[int, ...]
    ring: str = Z

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != pair_count(self.n):
            raise ValueError(f"expected {pair_count(self.n)} coefficients for degree {self.n}")
        if self.ring == Z2:
            values = tuple(v % 2 for v in values)
        elif self.ring != Z:
            raise ValueError(f"unknown coefficient ring {self.ring!r}")
        object.__setattr__(self, "values", values)

    @classmethod
    def zero(cls, n: int, ring: str = Z) -> "PairVector":
        return cls(n, (0,) * pair_count(n), ring)

    @classmethod
    def basis(cls, n: int, i: int, j: int, ring: str = Z) -> "PairVector":
        """e_{i,j} (written g_{i,j} or ḡ_{i,j} in the relation tables)."""
        values = [0] * pair_count(n)
        values[pair_index(n, UPair(i, j))] = 1
        return cls(n, tuple(values), ring)

    @classmethod
    def from_mapping(cls, n: int, coeffs: Mapping[UPair, int], ring: str = Z) -> "PairVector":
        values = [0] * pair_count(n)
        for pair, value in coeffs.items():
            values[pair_index(n, pair)] += value
        return cls(n, tuple(values), ring)

    def __getitem__(self, pair: UPair) -> int:
        return self.values[pair_index(self.n, pair)]

    def _check(self, other: "PairVector"):
        if self.n != other.n:
            raise DegreeMismatch(self.n, other.n)
        if self.ring != other.ring:
            raise RingMismatch(f"cannot combine {self.ring} and {other.ring} vectors")

    def __add__(self, other: "PairVector") -> "PairVector":
        self._check(other)
        return PairVector(self.n, tuple(a + b for a, b in zip(self.values, other.values)), self.ring)

    def __sub__(self, other: "PairVector") -> "PairVector":
        self._check(other)
        return PairVector(self.n, tuple(a - b for a, b in zip(self.values, other.values)), self.ring)

    def __neg__(self) -> "PairVector":
        return PairVector(self.n, tuple(-v for v in self.values), self.ring)

    def scale(self, k: int) -> "PairVector":
        return PairVector(self.n, tuple(k * v for v in self.values), self.ring)

    def is_zero(self) -> bool:
        return not any(self.values)

    def to_ring(self, ring: str) -> "PairVector":
        if ring == self.ring:
            return self
        if ring == Z2:
            return PairVector(self.n, self.values, Z2)
        raise RingMismatch("a Z_2 vector has no canonical lift to Z")

    def items(self) -> List[Tuple[UPair, int]]:
        """Nonzero (pair, coefficient) entries in pair order."""
        return [(pair, v) for pair, v in zip(_pairs(self.n), self.values) if v]

    def to_json(self) -> Dict[str, int]:
        return {pair.key(): v for pair, v in self.items()}

    def __str__(self) -> str:
        terms = [f"{v:+d}·e({pair.lo},{pair.hi})" for pair, v in self.items()]
        return " ".join(terms) if terms else "0"


def vector_sum(n: int, vectors: Iterable[PairVector], ring: str = Z) -> PairVector:
    total = PairVector.zero(n, ring)
    for vector in vectors:
        total = total + vector
    return total


@dataclass(frozen=True)
class CrossingCounts:
    """Signed crossing counts keyed by the start labels of the crossing strands."""

    n: int
    counts: PairVector

    def __getitem__(self, pair: UPair) -> int:
        return self.counts[pair]

    def to_json(self) -> Dict[str, int]:
        return self.counts.to_json()


def crossing_counts(w: BraidWord) -> CrossingCounts:
    """
    Sweep the Artin expansion letter by letter; at b_i^ε add ε to the pair of start
    labels sitting at positions i and i+1, then swap them.
    """
    n = w.n
    values = [0] * pair_count(n)
    label_at = list(range(1, n + 1))
    for letter in artin_expand(w).letters:
        i = letter.pair.lo - 1
        a, b = label_at[i], label_at[i + 1]
        values[pair_index(n, UPair(a, b))] += letter.exponent
        label_at[i], label_at[i + 1] = b, a
    return CrossingCounts(n, PairVector(n, tuple(values), Z))


def is_pure(w: BraidWord) -> bool:
    return perm_of(w).is_identity()


def winding_vector(w: BraidWord) -> PairVector:
    """
    Winding numbers of a pure braid: half of each signed crossing count.

    Raises:
        NotPure: if the braid permutes its strands
        OddCrossing: if some count is odd (cannot happen for a pure braid)
    """
    permutation = perm_of(w)
    if not permutation.is_identity():
        raise NotPure(f"braid {w} induces {permutation}, not the identity")
    counts = crossing_counts(w).counts
    for pair, value in counts.items():
        if value % 2:
            raise OddCrossing(f"odd crossing count {value} on {pair} in pure braid {w}")
    return PairVector(w.n, tuple(v // 2 for v in counts.values), Z)


def push_forward(p: Permutation, v: PairVector) -> PairVector:
    """
    θ(p)v with (θ(p)v)[{p(i), p(j)}] = v[{i, j}].
    """
    if p.n != v.n:
        raise DegreeMismatch(p.n, v.n)
    values = [0] * len(v.values)
    for pair, value in zip(_pairs(v.n), v.values):
        if value:
            values[pair_index(v.n, UPair(p(pair.lo), p(pair.hi)))] = value
    return PairVector(v.n, tuple(values), v.ring)
