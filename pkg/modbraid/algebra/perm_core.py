"""
Permutations of {1..n}, transpositions, the normal-form algorithm for the chosen
section, and the action of S_n on unordered pairs.

Composition is left to right: (p·q)(x) = q(p(x)). Under this convention p·σ_{k,n}
fixes n when k = p(n), which is what the normal-form recursion relies on.
"""

import re
from dataclasses import dataclass
from functools import reduce
from itertools import combinations, permutations
from typing import Iterator, List, Sequence, Tuple

from modbraid.errors import DegreeMismatch, ParseError


@dataclass(frozen=True, order=True)
class UPair:
    """Unordered pair {lo, hi} with lo < hi; the constructor canonicalizes the order."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo == self.hi:
            raise ValueError(f"UPair needs two distinct indices, got {self.lo}")
        if self.lo > self.hi:
            lo, hi = self.hi, self.lo
            object.__setattr__(self, "lo", lo)
            object.__setattr__(self, "hi", hi)
        if self.lo < 1:
            raise ValueError(f"UPair indices start at 1, got {self.lo}")

    def __iter__(self):
        return iter((self.lo, self.hi))

    def disjoint(self, other: "UPair") -> bool:
        return self.lo not in (other.lo, other.hi) and self.hi not in (other.lo, other.hi)

    def key(self) -> str:
        """JSON key form "i,j"."""
        return f"{self.lo},{self.hi}"

    def __str__(self) -> str:
        return f"s({self.lo},{self.hi})"


def all_pairs(n: int) -> List[UPair]:
    """Every unordered pair of {1..n}, in lexicographic order."""
    return [UPair(i, j) for i, j in combinations(range(1, n + 1), 2)]


@dataclass(frozen=True)
class Permutation:
    """
    Bijection of {1..n}; images[x - 1] is p(x).
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if len(images) < 1:
            raise ValueError("Permutation degree must be at least 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{list(images)} is not a permutation of 1..{len(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def is_identity(self) -> bool:
        return all(image == x for x, image in enumerate(self.images, start=1))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_permutation(self)


@dataclass(frozen=True)
class TranspositionWord:
    """Product of transpositions σ_{lo,hi}, composed left to right."""

    n: int
    factors: Tuple[UPair, ...] = ()

    def to_permutation(self) -> Permutation:
        return reduce(compose, (transposition(self.n, f.lo, f.hi) for f in self.factors), identity(self.n))

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return " ".join(str(f) for f in self.factors) or "1"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(n: int, i: int, j: int) -> Permutation:
    """σ_{i,j} in S_n."""
    pair = UPair(i, j)
    if pair.hi > n:
        raise ValueError(f"transposition {pair} out of range for degree {n}")
    images = list(range(1, n + 1))
    images[pair.lo - 1], images[pair.hi - 1] = pair.hi, pair.lo
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """
    Left-to-right product: (p·q)(x) = q(p(x)).

    Raises:
        DegreeMismatch: if p and q act on different sets
    """
    if p.n != q.n:
        raise DegreeMismatch(p.n, q.n)
    return Permutation(tuple(q(p(x)) for x in range(1, p.n + 1)))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.n
    for x, image in enumerate(p.images, start=1):
        images[image - 1] = x
    return Permutation(tuple(images))


def all_permutations(n: int) -> Iterator[Permutation]:
    """Every element of S_n in lexicographic order of the image tuple."""
    for images in permutations(range(1, n + 1)):
        yield Permutation(images)


def normal_form(p: Permutation) -> TranspositionWord:
    """
    Normal form σ_{k_2,2}·σ_{k_3,3}⋯σ_{k_n,n} of p, omitting factors with k_m = m.

    Peels the largest index first: k_m = p(m) for the current remainder p, then
    p ← p·σ_{k_m,m}, which fixes m.
    """
    factors: List[UPair] = []
    images = list(p.images)
    for m in range(p.n, 1, -1):
        k = images[m - 1]
        if k == m:
            continue
        # right-multiplying by σ_{k,m} swaps the values k and m in the image list
        for x, image in enumerate(images):
            if image == k:
                images[x] = m
            elif image == m:
                images[x] = k
        factors.append(UPair(k, m))
    factors.reverse()
    return TranspositionWord(p.n, tuple(factors))


def pair_action(p: Permutation, x: UPair) -> UPair:
    """Standard action on unordered pairs: {i,j} ↦ {p(i), p(j)}."""
    if x.hi > p.n:
        raise ValueError(f"pair {x} out of range for degree {p.n}")
    return UPair(p(x.lo), p(x.hi))


def pair_normal_form(n: int, a: UPair, b: UPair) -> TranspositionWord:
    """
    Closed-form normal form of σ_a·σ_b.

    Disjoint pairs are ordered by their larger index. Pairs sharing an index i,
    written σ_{i,k}σ_{i,j}, split on max{i,k,j}:
      max = j → σ_{i,k} σ_{i,j}
      max = k → σ_{i,j} σ_{j,k}
      max = i → σ_{k,j} σ_{k,i}
    """
    if a == b:
        return TranspositionWord(n, ())
    if a.disjoint(b):
        return TranspositionWord(n, tuple(sorted((a, b), key=lambda pair: pair.hi)))
    i = a.lo if a.lo in (b.lo, b.hi) else a.hi
    k = a.hi if i == a.lo else a.lo
    j = b.hi if i == b.lo else b.lo
    top = max(i, k, j)
    if top == j:
        factors = (UPair(i, k), UPair(i, j))
    elif top == k:
        factors = (UPair(i, j), UPair(j, k))
    else:
        factors = (UPair(k, j), UPair(k, i))
    return TranspositionWord(n, factors)


_PERM_TEXT = re.compile(r"^\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*$")
_TRANSPOSITION_TEXT = re.compile(r"^\s*s\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")


def parse_permutation(text: str, n: int = None) -> Permutation:
    """
    Parse one-line image notation "[2,3,1]" or a transposition "s(i,j)".

    A transposition needs the degree n; image notation carries its own degree
    and is checked against n when n is given.
    """
    match = _PERM_TEXT.match(text)
    if match:
        body = match.group(1)
        if body is None:
            raise ParseError(f"empty permutation {text!r}")
        try:
            perm = Permutation(tuple(int(part) for part in body.split(",")))
        except ValueError as e:
            raise ParseError(str(e))
        if n is not None and perm.n != n:
            raise DegreeMismatch(perm.n, n)
        return perm
    match = _TRANSPOSITION_TEXT.match(text)
    if match:
        if n is None:
            raise ParseError(f"transposition {text!r} needs a degree")
        try:
            return transposition(n, int(match.group(1)), int(match.group(2)))
        except ValueError as e:
            raise ParseError(str(e))
    raise ParseError(f"cannot read permutation {text!r}")


def format_permutation(p: Permutation) -> str:
    return "[" + ",".join(str(image) for image in p.images) + "]"


def perm_from_transpositions(n: int, pairs: Sequence[UPair]) -> Permutation:
    return TranspositionWord(n, tuple(pairs)).to_permutation()
