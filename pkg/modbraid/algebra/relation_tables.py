"""
Symbolic relation tables for the extensions of S_n.

Three tables share one shape: kernel relations (R1, and R0 over Z_2), lifted
symmetric-group relations (R2-R5) and the conjugation action (R6).

    table1     G_n      relations over Z, scale 1
    table2     G_n^t    relations over Z, kernel exponents scaled by t
    table3     Z_n      relations over Z_2

A relation is stored as lhs = rhs with both sides words in the letters s_{i,j}^±1
(lifted half twists) and g_{i,j}^e (kernel generators). Kernel-valued right-hand
sides are listed in pair order; the kernel is abelian, so the order is cosmetic.
"""

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Tuple

from modbraid.algebra.perm_core import UPair, all_pairs, pair_action, transposition

TABLE1 = "table1"
TABLE2 = "table2"
TABLE3 = "table3"
TABLES = (TABLE1, TABLE2, TABLE3)

SIGMA = "s"
KERNEL = "g"


@dataclass(frozen=True)
class Sym:
    """One letter of a relation: s_{pair}^exponent or g_{pair}^exponent."""

    kind: str
    pair: UPair
    exponent: int = 1

    def __post_init__(self):
        if self.kind not in (SIGMA, KERNEL):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.exponent == 0:
            raise ValueError("letter exponent must be nonzero")
        if self.kind == SIGMA and self.exponent not in (1, -1):
            raise ValueError("half-twist letters carry exponent +1 or -1")

    def inverse(self) -> "Sym":
        return Sym(self.kind, self.pair, -self.exponent)

    @property
    def name(self) -> str:
        """Generator name used by presentations: s1_3, g2_4."""
        return f"{self.kind}{self.pair.lo}_{self.pair.hi}"

    def __str__(self) -> str:
        base = f"{self.kind}({self.pair.lo},{self.pair.hi})"
        return base if self.exponent == 1 else f"{base}^{self.exponent}"


SymWord = Tuple[Sym, ...]


def s(i: int, j: int, exponent: int = 1) -> Sym:
    return Sym(SIGMA, UPair(i, j), exponent)


def g(i: int, j: int, exponent: int = 1) -> Sym:
    return Sym(KERNEL, UPair(i, j), exponent)


def invert_symbols(symbols: SymWord) -> SymWord:
    return tuple(letter.inverse() for letter in reversed(symbols))


def format_symbols(symbols: SymWord) -> str:
    return " ".join(str(letter) for letter in symbols) or "1"


@dataclass(frozen=True)
class RelationInstance:
    """
    One instantiated row of a relation table.

    literal_rhs is set on R6 rows of table2/table3 and holds the right-hand side
    exactly as the table prints it; rhs always holds g_{σ(k),σ(ℓ)}. A literal entry
    that names no valid pair (k = i on a j = ℓ row) is kept as None with
    literal_defined False.
    """

    table: str
    row: str
    indices: Tuple[int, ...]
    lhs: SymWord
    rhs: SymWord
    literal_rhs: Optional[SymWord] = None
    literal_defined: bool = True

    @property
    def relator(self) -> SymWord:
        """lhs · rhs^{-1}."""
        return self.lhs + invert_symbols(self.rhs)


def _row_names(table: str) -> Dict[str, str]:
    if table == TABLE1:
        return {k: f"R{k}" for k in "123456"}
    if table == TABLE2:
        return {k: f"Rt{k}" for k in "123456"}
    return {k: f"r{k}" for k in "0123456"}


def _kernel_sorted(letters: List[Sym]) -> SymWord:
    return tuple(sorted(letters, key=lambda letter: letter.pair))


def _r3_order(i: int, j: int, k: int) -> bool:
    return k < i < j or i < j < k or j < k < i


def _r4_order(i: int, j: int, k: int) -> bool:
    return i < k < j or j < i < k or k < j < i


def _r5_rhs(i: int, j: int, k: int, l: int, e: int, mod2: bool) -> SymWord:
    """Right-hand side of [s_{i,j}, s_{k,ℓ}] for i<j, k<ℓ disjoint."""
    if i < k < j < l:
        signs = ((i, k, 1), (i, l, -1), (j, k, -1), (j, l, 1))
    elif k < i < l < j:
        signs = ((k, i, -1), (k, j, 1), (i, l, 1), (l, j, -1))
    else:
        return ()
    if mod2:
        return _kernel_sorted([g(a, b) for a, b, _ in signs])
    return _kernel_sorted([g(a, b, sign * e) for a, b, sign in signs])


def _r6_literal(table: str, a: UPair, b: UPair) -> Tuple[Optional[SymWord], bool]:
    if table == TABLE1:
        return None, True
    i, j = a.lo, a.hi
    k, l = b.lo, b.hi
    shares_one = len({i, j} & {k, l}) == 1
    if table == TABLE2:
        if shares_one and j == l:
            return (g(i, k),), True
        return (g(k, l),), True
    if j == l:
        if i == k:
            return None, False
        return (g(i, k),), True
    return (g(k, l),), True


def table_relations(table: str, n: int, t: int = 1) -> List[RelationInstance]:
    """
    Every row of the given table instantiated over all valid index tuples of {1..n}.

    table1 ignores t (it is table2 at t = 1 with its own row names); table3 works
    modulo 2, so its kernel exponents are all 1.
    """
    if table not in TABLES:
        raise ValueError(f"unknown relation table {table!r}")
    if t < 1:
        raise ValueError(f"scale t must be positive, got {t}")
    if table != TABLE2:
        t = 1
    mod2 = table == TABLE3
    names = _row_names(table)
    pairs = all_pairs(n)
    rows: List[RelationInstance] = []

    if mod2:
        for a in pairs:
            rows.append(RelationInstance(table, names["0"], (a.lo, a.hi),
                                         (g(a.lo, a.hi), g(a.lo, a.hi)), ()))

    for x, a in enumerate(pairs):
        for b in pairs[x + 1:]:
            lhs = (g(a.lo, a.hi), g(b.lo, b.hi), g(a.lo, a.hi, -1), g(b.lo, b.hi, -1))
            rows.append(RelationInstance(table, names["1"], (a.lo, a.hi, b.lo, b.hi), lhs, ()))

    for a in pairs:
        rows.append(RelationInstance(table, names["2"], (a.lo, a.hi),
                                     (s(a.lo, a.hi), s(a.lo, a.hi)), (g(a.lo, a.hi, t),)))

    for i, j, k in permutations(range(1, n + 1), 3):
        if _r3_order(i, j, k):
            lhs = (s(i, j), s(k, j), s(i, j, -1))
            rows.append(RelationInstance(table, names["3"], (i, j, k), lhs, (s(i, k),)))
    for i, j, k in permutations(range(1, n + 1), 3):
        if _r4_order(i, j, k):
            lhs = (s(i, j, -1), s(j, k), s(i, j))
            rows.append(RelationInstance(table, names["4"], (i, j, k), lhs, (s(i, k),)))

    for a in pairs:
        for b in pairs:
            if not a.disjoint(b):
                continue
            lhs = (s(a.lo, a.hi), s(b.lo, b.hi), s(a.lo, a.hi, -1), s(b.lo, b.hi, -1))
            rhs = _r5_rhs(a.lo, a.hi, b.lo, b.hi, t, mod2)
            rows.append(RelationInstance(table, names["5"], (a.lo, a.hi, b.lo, b.hi), lhs, rhs))

    for a in pairs:
        swap = transposition(n, a.lo, a.hi)
        for b in pairs:
            image = pair_action(swap, b)
            lhs = (s(a.lo, a.hi), g(b.lo, b.hi), s(a.lo, a.hi, -1))
            literal, defined = _r6_literal(table, a, b)
            rows.append(RelationInstance(table, names["6"], (a.lo, a.hi, b.lo, b.hi), lhs,
                                         (g(image.lo, image.hi),), literal, defined))
    return rows
