"""
Todd-Coxeter enumeration of the cosets of the trivial subgroup, and the order of
Z_n by direct closure.

The enumerator keeps a Schreier graph with two columns per generator (x and x^-1),
a union-find label array for coincidences, and defines cosets while tracing every
relator from every live coset, then fills whatever its row still lacks (HLT). When
the live count reaches the limit it runs one scan-only lookahead pass, then gives up
if nothing collapsed.
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from modbraid.algebra.ext_groups import ZN, closure, sigma_tilde, zn_order
from modbraid.algebra.presentations import Presentation, Relator, cyclic_reduce_relator
from modbraid.config import get_settings
from modbraid.errors import EnumerationAborted, SearchSpaceTooLarge

logger = logging.getLogger(__name__)

COMPLETE = "complete"
ABORTED = "aborted"

UNDEFINED = -1


@dataclass(frozen=True)
class CosetTable:
    """
    Standardized coset table: rows[c][2g] is c·x_g and rows[c][2g+1] is c·x_g^{-1};
    coset 0 is the subgroup. An aborted table keeps no rows.
    """

    generators: Tuple[str, ...]
    rows: Tuple[Tuple[int, ...], ...]
    status: str
    limit: int
    defined: int = 0

    def order(self) -> int:
        """
        Raises:
            EnumerationAborted: if the enumeration hit its coset limit
        """
        if self.status != COMPLETE:
            raise EnumerationAborted(self.limit)
        return len(self.rows)

    def column(self, name: str, exponent: int = 1) -> int:
        return 2 * self.generators.index(name) + (0 if exponent == 1 else 1)

    def action(self, name: str) -> Tuple[int, ...]:
        """Permutation of the cosets induced by a generator."""
        col = self.column(name)
        return tuple(row[col] for row in self.rows)

    def trace(self, coset: int, word: Sequence[Tuple[str, int]]) -> int:
        for name, exponent in word:
            coset = self.rows[coset][self.column(name, exponent)]
        return coset

    def is_consistent(self, relators: Sequence[Relator]) -> bool:
        """Every relator traces back to its start from every coset."""
        return all(self.trace(c, r) == c for c in range(len(self.rows)) for r in relators)

    def to_json(self) -> Dict:
        return {"generators": list(self.generators), "status": self.status,
                "order": len(self.rows) if self.status == COMPLETE else None,
                "limit": self.limit, "defined": self.defined}


class _Enumerator:
    """Mutable Schreier graph; lives for one todd_coxeter call."""

    def __init__(self, pres: Presentation, limit: int):
        self.generators = pres.generators
        self.columns = 2 * len(self.generators)
        index = {name: k for k, name in enumerate(self.generators)}
        relators = {cyclic_reduce_relator(r) for r in pres.relators}
        self.relators: List[Tuple[int, ...]] = sorted(
            (tuple(2 * index[name] + (0 if e == 1 else 1) for name, e in r) for r in relators if r),
            key=lambda r: (len(r), r),
        )
        self.limit = limit
        self.labels: List[int] = []
        self.neighbors: List[List[int]] = []
        self.live = 0
        self.add_coset()

    @staticmethod
    def inverse(col: int) -> int:
        return col ^ 1

    def add_coset(self) -> int:
        c = len(self.labels)
        self.labels.append(c)
        self.neighbors.append([UNDEFINED] * self.columns)
        self.live += 1
        return c

    def find(self, c: int) -> int:
        labels = self.labels
        root = c
        while labels[root] != root:
            root = labels[root]
        while labels[c] != root:
            labels[c], c = root, labels[c]
        return root

    def unify(self, c1: int, c2: int):
        to_unify = [(c1, c2)]
        while to_unify:
            c1, c2 = to_unify.pop()
            c1, c2 = self.find(c1), self.find(c2)
            if c1 == c2:
                continue
            c1, c2 = min(c1, c2), max(c1, c2)
            self.labels[c2] = c1
            self.live -= 1
            row1, row2 = self.neighbors[c1], self.neighbors[c2]
            for col in range(self.columns):
                n1, n2 = row1[col], row2[col]
                if n1 == UNDEFINED:
                    row1[col] = n2
                elif n2 != UNDEFINED:
                    to_unify.append((n1, n2))

    def follow_step(self, c: int, col: int) -> int:
        c = self.find(c)
        row = self.neighbors[c]
        if row[col] == UNDEFINED:
            d = self.add_coset()
            row[col] = d
            self.neighbors[d][self.inverse(col)] = c
            return d
        return self.find(row[col])

    def follow_path(self, c: int, word: Sequence[int]) -> int:
        for col in word:
            c = self.follow_step(c, col)
        return c

    def step(self, c: int, col: int) -> int:
        target = self.neighbors[self.find(c)][col]
        return UNDEFINED if target == UNDEFINED else self.find(target)

    def scan(self, c: int, word: Sequence[int]):
        """Trace word from c in both directions without defining; close a single gap."""
        forward, i = self.find(c), 0
        while i < len(word):
            nxt = self.step(forward, word[i])
            if nxt == UNDEFINED:
                break
            forward, i = nxt, i + 1
        if i == len(word):
            if forward != self.find(c):
                self.unify(forward, c)
            return
        backward, j = self.find(c), len(word)
        while j > i:
            nxt = self.step(backward, self.inverse(word[j - 1]))
            if nxt == UNDEFINED:
                break
            backward, j = nxt, j - 1
        if j == i:
            self.unify(forward, backward)
        elif j == i + 1:
            col = word[i]
            self.neighbors[self.find(forward)][col] = backward
            self.neighbors[self.find(backward)][self.inverse(col)] = forward

    def close_row(self, c: int):
        """Define every entry of row c still undefined, including generators in no relator."""
        for col in range(self.columns):
            if self.find(c) != c:
                return
            if self.neighbors[c][col] == UNDEFINED:
                self.follow_step(c, col)

    def lookahead(self):
        for c in range(len(self.labels)):
            if self.find(c) != c:
                continue
            for rel in self.relators:
                if self.find(c) != c:
                    break
                self.scan(c, rel)

    def run(self) -> bool:
        to_visit = 0
        while to_visit < len(self.labels):
            c = self.find(to_visit)
            if c == to_visit:
                for rel in self.relators:
                    self.unify(self.follow_path(c, rel), c)
                    c = self.find(c)
                    if c != to_visit:
                        break
                else:
                    self.close_row(c)
            to_visit += 1
            if self.live > self.limit:
                logger.info(f"Coset limit {self.limit} reached at {len(self.labels)} defined; looking ahead")
                self.lookahead()
                if self.live > self.limit:
                    return False
            if to_visit % 10000 == 0:
                logger.info(f"Todd-Coxeter: visited {to_visit}, live {self.live}, defined {len(self.labels)}")
        return True

    def standardize(self) -> Tuple[Tuple[int, ...], ...]:
        """
        Renumber live cosets in breadth-first order from the subgroup coset.

        Raises:
            EnumerationAborted: if a live coset still has an undefined entry
        """
        start = self.find(0)
        order = {start: 0}
        queue = deque([start])
        while queue:
            c = queue.popleft()
            for col in range(self.columns):
                d = self.step(c, col)
                if d == UNDEFINED:
                    raise EnumerationAborted(self.limit)
                if d not in order:
                    order[d] = len(order)
                    queue.append(d)
        rows = [None] * len(order)
        for c, k in order.items():
            rows[k] = tuple(order[self.step(c, col)] for col in range(self.columns))
        return tuple(rows)


def todd_coxeter(pres: Presentation, coset_limit: Optional[int] = None) -> CosetTable:
    """
    Enumerate the cosets of the trivial subgroup of ⟨S | R⟩.

    Returns:
        CosetTable: status "complete" with |G| rows, or "aborted" when more than
        coset_limit cosets were live at once
    """
    limit = get_settings().coset_limit if coset_limit is None else coset_limit
    if limit < 1:
        raise ValueError(f"coset limit must be positive, got {limit}")
    enumerator = _Enumerator(pres, limit)
    if not enumerator.run():
        logger.warning(f"Coset enumeration of {pres.name or 'presentation'} aborted at limit {limit}")
        return CosetTable(pres.generators, (), ABORTED, limit, len(enumerator.labels))
    rows = enumerator.standardize()
    logger.info(f"Coset enumeration of {pres.name or 'presentation'}: {len(rows)} cosets, "
                f"{len(enumerator.labels)} defined")
    return CosetTable(pres.generators, rows, COMPLETE, limit, len(enumerator.labels))


def enumerate_Zn(n: int, max_n: Optional[int] = None) -> int:
    """
    |Z_n| as the size of the closure of the lifted adjacent transpositions.

    Raises:
        SearchSpaceTooLarge: if n exceeds the configured guard
    """
    limit = get_settings().search_max_n if max_n is None else max_n
    if n > limit:
        raise SearchSpaceTooLarge(f"enumerate_Zn is limited to n <= {limit}, got {n}")
    if n < 2:
        return 1
    generators = [sigma_tilde(n, i, i + 1, ZN) for i in range(1, n)]
    size = len(closure(generators, limit=zn_order(n)))
    logger.info(f"Closure of Z_{n}: {size} elements")
    return size
