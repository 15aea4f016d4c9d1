"""
Braid words over Artin generators b_i and band generators b_{i,j}.

Band letters stay symbolic in words; every semantic evaluation (permutation,
crossings, Burau matrices) runs on the Artin expansion produced by artin_expand().
"""

import re
from dataclasses import dataclass
from typing import Iterable, List, Tuple

from modbraid.algebra.perm_core import Permutation, UPair
from modbraid.errors import DegreeMismatch, ParseError


@dataclass(frozen=True)
class BraidLetter:
    """
    One signed letter: b_i^±1 (artin=True, pair={i,i+1}) or b_{i,j}^±1.
    """

    pair: UPair
    exponent: int = 1
    artin: bool = False

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {self.exponent}")
        if self.artin and self.pair.hi != self.pair.lo + 1:
            raise ValueError(f"Artin letter needs adjacent strands, got {self.pair}")

    @classmethod
    def b(cls, i: int, exponent: int = 1) -> "BraidLetter":
        return cls(UPair(i, i + 1), exponent, artin=True)

    @classmethod
    def band(cls, i: int, j: int, exponent: int = 1) -> "BraidLetter":
        return cls(UPair(i, j), exponent, artin=False)

    @property
    def index(self) -> int:
        """Artin index i of b_i (the lower strand of an adjacent pair)."""
        return self.pair.lo

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.pair, -self.exponent, self.artin)

    def __str__(self) -> str:
        base = f"b{self.pair.lo}" if self.artin else f"B({self.pair.lo},{self.pair.hi})"
        return base if self.exponent == 1 else f"{base}^-1"


@dataclass(frozen=True)
class BraidWord:
    """Word in B_n; letters are read left to right."""

    n: int
    letters: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 1:
            raise ValueError("braid degree must be at least 1")
        for letter in self.letters:
            if letter.pair.hi > self.n:
                raise ValueError(f"letter {letter} out of range for B_{self.n}")

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __str__(self) -> str:
        return format_word(self)

    def artin_length(self) -> int:
        return sum(2 * (letter.pair.hi - letter.pair.lo) - 1 for letter in self.letters)


def word(n: int, letters: Iterable[BraidLetter] = ()) -> BraidWord:
    return BraidWord(n, tuple(letters))


def band_expand(pair: UPair, n: int) -> BraidWord:
    """
    b_{i,j} = b_i ⋯ b_{j-2} b_{j-1} b_{j-2}^{-1} ⋯ b_i^{-1}, of length 2(j-i)-1.
    """
    if pair.hi > n:
        raise ValueError(f"band {pair} out of range for B_{n}")
    rising = [BraidLetter.b(i) for i in range(pair.lo, pair.hi - 1)]
    falling = [BraidLetter.b(i, -1) for i in range(pair.hi - 2, pair.lo - 1, -1)]
    return BraidWord(n, tuple(rising + [BraidLetter.b(pair.hi - 1)] + falling))


def artin_expand(w: BraidWord) -> BraidWord:
    """Replace every band letter by its Artin expansion (inverted for exponent -1)."""
    letters: List[BraidLetter] = []
    for letter in w.letters:
        if letter.artin or letter.pair.hi == letter.pair.lo + 1:
            letters.append(BraidLetter.b(letter.pair.lo, letter.exponent))
            continue
        expansion = band_expand(letter.pair, w.n)
        if letter.exponent == -1:
            expansion = invert(expansion)
        letters.extend(expansion.letters)
    return BraidWord(w.n, tuple(letters))


def concat(w1: BraidWord, w2: BraidWord) -> BraidWord:
    if w1.n != w2.n:
        raise DegreeMismatch(w1.n, w2.n)
    return BraidWord(w1.n, w1.letters + w2.letters)


def invert(w: BraidWord) -> BraidWord:
    """Reverse the word and flip every exponent."""
    return BraidWord(w.n, tuple(letter.inverse() for letter in reversed(w.letters)))


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent x x^{-1} pairs only; no braid relations are applied."""
    stack: List[BraidLetter] = []
    for letter in w.letters:
        if stack and stack[-1].pair == letter.pair and stack[-1].exponent == -letter.exponent:
            stack.pop()
        else:
            stack.append(letter)
    return BraidWord(w.n, tuple(stack))


def power(w: BraidWord, k: int) -> BraidWord:
    base = w if k >= 0 else invert(w)
    return BraidWord(w.n, base.letters * abs(k))


def commutator(u: BraidWord, v: BraidWord) -> BraidWord:
    """[u, v] = u v u^{-1} v^{-1}."""
    return concat(concat(u, v), concat(invert(u), invert(v)))


def perm_of(w: BraidWord) -> Permutation:
    """
    Image in S_n: b_i ↦ σ_{i,i+1}, b_{i,j} ↦ σ_{i,j}.

    p(x) is the final position of the strand that starts at position x, which makes
    perm_of a homomorphism for the left-to-right product of permutations.
    """
    label_at = list(range(1, w.n + 1))
    for letter in w.letters:
        lo, hi = letter.pair.lo - 1, letter.pair.hi - 1
        label_at[lo], label_at[hi] = label_at[hi], label_at[lo]
    images = [0] * w.n
    for position, label in enumerate(label_at, start=1):
        images[label - 1] = position
    return Permutation(tuple(images))


_TOKEN = re.compile(
    r"^(?:b(?P<artin>\d+)|(?P<kind>[Bg])\((?P<i>\d+),(?P<j>\d+)\))(?P<inv>\^-1)?$"
)


def parse_word(text: str, n: int) -> BraidWord:
    """
    Read a whitespace-separated word: b3, b3^-1, B(1,4), B(1,4)^-1, g(1,4), g(1,4)^-1.

    g(i,j) is sugar for B(i,j) B(i,j), the full twist.
    """
    letters: List[BraidLetter] = []
    column = 1
    for token in text.split():
        column = text.index(token, column - 1) + 1
        match = _TOKEN.match(token)
        if not match:
            raise ParseError(f"unknown braid token {token!r}", line=1, column=column)
        exponent = -1 if match.group("inv") else 1
        try:
            if match.group("artin") is not None:
                letters.append(BraidLetter.b(int(match.group("artin")), exponent))
            else:
                letter = BraidLetter.band(int(match.group("i")), int(match.group("j")), exponent)
                letters.extend([letter] * (2 if match.group("kind") == "g" else 1))
        except ValueError as e:
            raise ParseError(f"{token!r}: {e}", line=1, column=column)
        column += len(token)
    try:
        return BraidWord(n, tuple(letters))
    except ValueError as e:
        raise ParseError(str(e))


def format_word(w: BraidWord) -> str:
    return " ".join(str(letter) for letter in w.letters)
