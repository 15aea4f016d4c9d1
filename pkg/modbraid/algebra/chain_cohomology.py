"""
Low-dimensional chain complexes of free ZS_n-modules and the 2-cocycles on them.

    R_*   truncated cellular resolution from the Cayley complex of S_n:
          one 0-cell x̃0, 1-cells x̃_{i,j}, 2-cells C(i,j), D(i,j,k,ℓ), E(i,k,j)
    P̄_*   normalized bar resolution, labels [ ], [p], [p|q] with p, q ≠ 1

γ: R_* → P̄_* is the comparison chain map; φ and κ are the closed-form cocycles on
R_2 with values in Z and Z_2 coefficients on unordered pairs. ZS_n acts on the
coefficient modules through p⋆v = θ(p^{-1})v.
"""

import logging
import re
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Mapping, Optional, Tuple, Union

import numpy as np

from modbraid.algebra.ext_groups import (
    GN, ZN, ExtElement, RingTag, act, bar_cocycle, ext_inv, ext_mul, section_element, theta,
)
from modbraid.algebra.perm_core import (
    Permutation, UPair, all_pairs, all_permutations, compose, format_permutation, identity,
    transposition,
)
from modbraid.algebra.strand_diagram import Z, Z2, PairVector, vector_sum
from modbraid.errors import DegreeMismatch, ParseError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# ZS_n
# ---------------------------------------------------------------------------

def _perm_key(p: Permutation) -> Tuple[int, ...]:
    return p.images


@dataclass(frozen=True)
class GroupRingElem:
    """Σ a_g·g in ZS_n; terms sorted by permutation, zero coefficients pruned."""

    n: int
    terms: Tuple[Tuple[Permutation, int], ...] = ()

    def __post_init__(self):
        merged: Dict[Permutation, int] = {}
        for p, coeff in self.terms:
            if p.n != self.n:
                raise DegreeMismatch(p.n, self.n)
            merged[p] = merged.get(p, 0) + coeff
        terms = tuple(sorted(((p, c) for p, c in merged.items() if c), key=lambda term: _perm_key(term[0])))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def zero(cls, n: int) -> "GroupRingElem":
        return cls(n)

    @classmethod
    def of(cls, p: Permutation, coeff: int = 1) -> "GroupRingElem":
        return cls(p.n, ((p, coeff),))

    @classmethod
    def one(cls, n: int) -> "GroupRingElem":
        return cls.of(identity(n))

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        return GroupRingElem(self.n, self.terms + other.terms)

    def __neg__(self) -> "GroupRingElem":
        return GroupRingElem(self.n, tuple((p, -c) for p, c in self.terms))

    def __sub__(self, other: "GroupRingElem") -> "GroupRingElem":
        return self + (-other)

    def __mul__(self, other: "GroupRingElem") -> "GroupRingElem":
        return GroupRingElem(self.n, tuple(
            (compose(p, q), a * b) for p, a in self.terms for q, b in other.terms
        ))

    def scale(self, k: int) -> "GroupRingElem":
        return GroupRingElem(self.n, tuple((p, k * c) for p, c in self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        return sum(c for _, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " ".join(f"{c:+d}·{format_permutation(p)}" for p, c in self.terms)


# ---------------------------------------------------------------------------
# Basis labels
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ZeroCell:
    """x̃0."""

    def sort_key(self) -> Tuple:
        return (0,)

    def __str__(self) -> str:
        return "x0"


@dataclass(frozen=True)
class OneCell:
    """x̃_{i,j}."""

    pair: UPair

    def sort_key(self) -> Tuple:
        return (1, self.pair.lo, self.pair.hi)

    def __str__(self) -> str:
        return f"x({self.pair.lo},{self.pair.hi})"


@dataclass(frozen=True)
class BarLabel:
    """[ ], [p] or [p|q]; entries are never the identity."""

    entries: Tuple[Permutation, ...] = ()

    def __post_init__(self):
        if len(self.entries) > 2:
            raise ValueError("bar labels above dimension 2 are not modelled")
        if any(p.is_identity() for p in self.entries):
            raise ValueError("normalized bar labels have no identity entries")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def sort_key(self) -> Tuple:
        return (2, len(self.entries)) + tuple(_perm_key(p) for p in self.entries)

    def __str__(self) -> str:
        return "[" + "|".join(format_permutation(p) for p in self.entries) + "]"


C, D, E = "c", "d", "e"


@dataclass(frozen=True)
class Cell2:
    """
    A free generator of R_2.

        C(i,j)       i < j
        D(i,j,k,ℓ)   i < j, k < ℓ, {i,j} ∩ {k,ℓ} = ∅
        E(i,k,j)     i, k, j distinct, any order
    """

    kind: str
    indices: Tuple[int, ...]

    def __post_init__(self):
        indices = tuple(self.indices)
        object.__setattr__(self, "indices", indices)
        if any(x < 1 for x in indices):
            raise ValueError(f"cell indices start at 1, got {indices}")
        if self.kind == C:
            valid = len(indices) == 2 and indices[0] < indices[1]
        elif self.kind == D:
            valid = (len(indices) == 4 and indices[0] < indices[1] and indices[2] < indices[3]
                     and len(set(indices)) == 4)
        elif self.kind == E:
            valid = len(indices) == 3 and len(set(indices)) == 3
        else:
            raise ValueError(f"unknown cell kind {self.kind!r}")
        if not valid:
            raise ValueError(f"invalid indices {indices} for a {self.kind.upper()} cell")

    @classmethod
    def c(cls, i: int, j: int) -> "Cell2":
        return cls(C, (i, j))

    @classmethod
    def d(cls, i: int, j: int, k: int, l: int) -> "Cell2":
        return cls(D, (i, j, k, l))

    @classmethod
    def e(cls, i: int, k: int, j: int) -> "Cell2":
        return cls(E, (i, k, j))

    @property
    def degree(self) -> int:
        """Smallest n the cell lives in."""
        return max(self.indices)

    def sort_key(self) -> Tuple:
        return (3, "cde".index(self.kind)) + self.indices

    def key(self) -> str:
        return format_cell(self)

    def __str__(self) -> str:
        return f"{self.kind.upper()}({','.join(str(x) for x in self.indices)})"


Label = Union[ZeroCell, OneCell, BarLabel, Cell2]

_CELL_TEXT = re.compile(r"^\s*([cdeCDE])\s*:\s*(\d+(?:\s*,\s*\d+)*)\s*$")


def parse_cell(text: str) -> Cell2:
    """Read "c:1,2", "d:1,3,2,4" or "e:1,2,3"."""
    match = _CELL_TEXT.match(text)
    if not match:
        raise ParseError(f"cannot read cell {text!r}; expected c:i,j, d:i,j,k,l or e:i,k,j")
    try:
        return Cell2(match.group(1).lower(), tuple(int(x) for x in match.group(2).split(",")))
    except ValueError as e:
        raise ParseError(str(e))


def format_cell(cell: Cell2) -> str:
    return f"{cell.kind}:{','.join(str(x) for x in cell.indices)}"


def all_cells(n: int) -> List[Cell2]:
    """Every 2-cell of R_2 at degree n: C cells, then D cells, then E cells."""
    pairs = all_pairs(n)
    cells = [Cell2.c(a.lo, a.hi) for a in pairs]
    cells += [Cell2.d(a.lo, a.hi, b.lo, b.hi) for a in pairs for b in pairs if a.disjoint(b)]
    cells += [Cell2.e(i, k, j) for i, k, j in permutations(range(1, n + 1), 3)]
    return cells


# ---------------------------------------------------------------------------
# Free modules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FreeModElem:
    """Σ r_b·b over basis labels b with ZS_n coefficients r_b."""

    n: int
    terms: Tuple[Tuple[Label, GroupRingElem], ...] = ()

    def __post_init__(self):
        merged: Dict[Label, GroupRingElem] = {}
        for label, coeff in self.terms:
            if coeff.n != self.n:
                raise DegreeMismatch(coeff.n, self.n)
            merged[label] = merged[label] + coeff if label in merged else coeff
        terms = tuple(sorted(((b, r) for b, r in merged.items() if not r.is_zero()),
                             key=lambda term: term[0].sort_key()))
        object.__setattr__(self, "terms", terms)

    @classmethod
    def zero(cls, n: int) -> "FreeModElem":
        return cls(n)

    @classmethod
    def basis(cls, n: int, label: Label, g: Optional[Permutation] = None, coeff: int = 1) -> "FreeModElem":
        """coeff·g·label (g defaults to the identity)."""
        return cls(n, ((label, GroupRingElem.of(g or identity(n), coeff)),))

    def __add__(self, other: "FreeModElem") -> "FreeModElem":
        if self.n != other.n:
            raise DegreeMismatch(self.n, other.n)
        return FreeModElem(self.n, self.terms + other.terms)

    def __neg__(self) -> "FreeModElem":
        return FreeModElem(self.n, tuple((b, -r) for b, r in self.terms))

    def __sub__(self, other: "FreeModElem") -> "FreeModElem":
        return self + (-other)

    def left_mul(self, r: GroupRingElem) -> "FreeModElem":
        """r·x, acting on every coefficient from the left."""
        return FreeModElem(self.n, tuple((b, r * coeff) for b, coeff in self.terms))

    def act(self, p: Permutation) -> "FreeModElem":
        return self.left_mul(GroupRingElem.of(p))

    def coefficient(self, label: Label) -> GroupRingElem:
        for b, r in self.terms:
            if b == label:
                return r
        return GroupRingElem.zero(self.n)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> List[Tuple[Label, GroupRingElem]]:
        return list(self.terms)

    def to_json(self) -> Dict[str, Dict[str, int]]:
        return {str(b): {format_permutation(p): c for p, c in r.terms} for b, r in self.terms}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({r}){b}" for b, r in self.terms)


def _linear(x: FreeModElem, on_basis) -> FreeModElem:
    """Extend a map on basis labels ZS_n-linearly."""
    total = FreeModElem.zero(x.n)
    for label, coeff in x.terms:
        total = total + on_basis(label).left_mul(coeff)
    return total


def _x(n: int, pair: UPair, g: Optional[Permutation] = None, coeff: int = 1) -> FreeModElem:
    return FreeModElem.basis(n, OneCell(pair), g, coeff)


def _bar(n: int, *entries: Permutation, g: Optional[Permutation] = None, coeff: int = 1) -> FreeModElem:
    """coeff·g·[entries], or 0 when an entry is the identity."""
    if any(p.is_identity() for p in entries):
        return FreeModElem.zero(n)
    return FreeModElem.basis(n, BarLabel(tuple(entries)), g, coeff)


def _sigma(n: int, i: int, j: int) -> Permutation:
    return transposition(n, i, j)


# ---------------------------------------------------------------------------
# Boundaries
# ---------------------------------------------------------------------------

def _check_degree(c: Cell2, n: int):
    if c.degree > n:
        raise ValueError(f"cell {c} does not live in degree {n}")


def boundary_R2(c: Cell2, n: int) -> FreeModElem:
    """
    ∂2 on R_2:

        C(i,j)      x̃_{i,j} + σ_{i,j}x̃_{i,j}
        D(i,j,k,ℓ)  x̃_{i,j} + σ_{i,j}x̃_{k,ℓ} − σ_{k,ℓ}x̃_{i,j} − x̃_{k,ℓ}
        E(i,k,j)    x̃_{i,j} + σ_{i,j}x̃_{j,k} − σ_{i,k}x̃_{i,j} − x̃_{i,k}

    The C boundary is the loop x̃_{i,j} followed by σ_{i,j}x̃_{i,j}, the image of
    [σ|σ] under the bar boundary.
    """
    _check_degree(c, n)
    if c.kind == C:
        i, j = c.indices
        a = UPair(i, j)
        return _x(n, a) + _x(n, a, _sigma(n, i, j))
    if c.kind == D:
        i, j, k, l = c.indices
        a, b = UPair(i, j), UPair(k, l)
        return (_x(n, a) + _x(n, b, _sigma(n, i, j))
                - _x(n, a, _sigma(n, k, l)) - _x(n, b))
    i, k, j = c.indices
    return (_x(n, UPair(i, j)) + _x(n, UPair(j, k), _sigma(n, i, j))
            - _x(n, UPair(i, j), _sigma(n, i, k)) - _x(n, UPair(i, k)))


def boundary_R1(x: OneCell, n: int) -> FreeModElem:
    """∂1(x̃_{i,j}) = (σ_{i,j} − 1)x̃0."""
    swap = _sigma(n, x.pair.lo, x.pair.hi)
    return FreeModElem.basis(n, ZeroCell(), swap) - FreeModElem.basis(n, ZeroCell())


def boundary_R(x: FreeModElem, dim: int) -> FreeModElem:
    """∂ on a 2-chain or 1-chain of R_*."""
    if dim == 2:
        return _linear(x, lambda label: boundary_R2(label, x.n))
    if dim == 1:
        return _linear(x, lambda label: boundary_R1(label, x.n))
    raise ValueError(f"R_* is truncated at dimension 2, got boundary in dimension {dim}")


def _boundary_bar_label(label: BarLabel, n: int) -> FreeModElem:
    if label.dim == 2:
        p, q = label.entries
        return _bar(n, q, g=p) - _bar(n, compose(p, q)) + _bar(n, p)
    if label.dim == 1:
        (p,) = label.entries
        return _bar(n, g=p) - _bar(n)
    raise ValueError("the bar boundary of [ ] is the augmentation, not a chain")


def boundary_P(x: FreeModElem, dim: int) -> FreeModElem:
    """
    Normalized bar boundary:

        [p|q] ↦ p[q] − [pq] + [p]
        [p]   ↦ p[ ] − [ ]

    Labels with an identity entry are zero.
    """
    if dim not in (1, 2):
        raise ValueError(f"bar boundary is modelled in dimensions 1 and 2, got {dim}")
    return _linear(x, lambda label: _boundary_bar_label(label, x.n))


def augmentation(x: FreeModElem) -> int:
    """ε: Σ r_b·b ↦ Σ ε(r_b) on a 0-chain."""
    return sum(coeff.augmentation() for _, coeff in x.terms)


# ---------------------------------------------------------------------------
# Chain map
# ---------------------------------------------------------------------------

def _gamma_label(label: Label, n: int) -> FreeModElem:
    if isinstance(label, ZeroCell):
        return _bar(n)
    if isinstance(label, OneCell):
        return _bar(n, _sigma(n, label.pair.lo, label.pair.hi))
    if isinstance(label, Cell2):
        if label.kind == C:
            i, j = label.indices
            return _bar(n, _sigma(n, i, j), _sigma(n, i, j))
        if label.kind == D:
            i, j, k, l = label.indices
            s_ij, s_kl = _sigma(n, i, j), _sigma(n, k, l)
            return _bar(n, s_ij, s_kl) - _bar(n, s_kl, s_ij)
        i, k, j = label.indices
        s_ij, s_jk, s_ik = _sigma(n, i, j), _sigma(n, j, k), _sigma(n, i, k)
        return _bar(n, s_ij, s_jk) - _bar(n, s_ik, s_ij)
    raise TypeError(f"γ is not defined on {label!r}")


def gamma(x: Union[Cell2, OneCell, ZeroCell, FreeModElem], n: Optional[int] = None) -> FreeModElem:
    """γ on a single generator (needs n) or ZS_n-linearly on a chain."""
    if isinstance(x, FreeModElem):
        return _linear(x, lambda label: _gamma_label(label, x.n))
    if n is None:
        raise ValueError("γ on a bare generator needs the degree n")
    return _gamma_label(x, n)


def check_chain_map(n: int) -> Dict:
    """
    ∂^P∘γ2 = γ1∘∂2^R on every 2-cell and ∂1^P∘γ1 = γ0∘∂1^R on every 1-cell.
    """
    rows = []
    for cell in all_cells(n):
        lhs = boundary_P(gamma(cell, n), 2)
        rhs = gamma(boundary_R2(cell, n))
        rows.append({"cell": format_cell(cell), "dim": 2, "pass": lhs == rhs,
                     "lhs": lhs.to_json(), "rhs": rhs.to_json()})
    for pair in all_pairs(n):
        lhs = boundary_P(gamma(OneCell(pair), n), 1)
        rhs = gamma(boundary_R1(OneCell(pair), n))
        rows.append({"cell": f"x:{pair.key()}", "dim": 1, "pass": lhs == rhs,
                     "lhs": lhs.to_json(), "rhs": rhs.to_json()})
    return {"suite": "chainmap", "n": n, "rows": rows}


def check_complexes(n: int) -> Dict:
    """
    ∂1∂2 = 0 and ε∂1 = 0 on every bar basis element of S_n, and ∂1∂2 = 0 on R_2.
    """
    perms = [p for p in all_permutations(n) if not p.is_identity()]
    failures = []
    checked = 0
    for p in perms:
        one = _bar(n, p)
        checked += 1
        if augmentation(boundary_P(one, 1)) != 0:
            failures.append(str(BarLabel((p,))))
        for q in perms:
            checked += 1
            if not boundary_P(boundary_P(_bar(n, p, q), 2), 1).is_zero():
                failures.append(str(BarLabel((p, q))))
    for cell in all_cells(n):
        checked += 1
        chain = FreeModElem.basis(n, cell)
        if not boundary_R(boundary_R(chain, 2), 1).is_zero():
            failures.append(str(cell))
    return {"suite": "complexes", "n": n, "checked": checked, "failures": failures[:10],
            "pass": not failures}


# ---------------------------------------------------------------------------
# Cocycles
# ---------------------------------------------------------------------------

def _e(n: int, a: int, b: int, ring: str = Z) -> PairVector:
    return PairVector.basis(n, a, b, ring)


def phi(c: Cell2, n: int) -> PairVector:
    """
    Integral cocycle on R_2, i < j and k < ℓ:

        C(i,j)      g_{i,j}
        D(i,j,k,ℓ)  g_{i,k} − g_{i,ℓ} − g_{k,j} + g_{j,ℓ}    if i < k < j < ℓ
                    −g_{i,k} + g_{k,j} + g_{i,ℓ} − g_{ℓ,j}   if k < i < ℓ < j
                    0                                        otherwise
        E(i,k,j)    g_{i,j} − g_{k,j}    if i<k<j, j<i<k or k<j<i
                    0                    otherwise
    """
    _check_degree(c, n)
    if c.kind == C:
        i, j = c.indices
        return _e(n, i, j)
    if c.kind == D:
        i, j, k, l = c.indices
        if i < k < j < l:
            return _e(n, i, k) - _e(n, i, l) - _e(n, k, j) + _e(n, j, l)
        if k < i < l < j:
            return -_e(n, i, k) + _e(n, k, j) + _e(n, i, l) - _e(n, l, j)
        return PairVector.zero(n)
    i, k, j = c.indices
    if i < k < j or j < i < k or k < j < i:
        return _e(n, i, j) - _e(n, k, j)
    return PairVector.zero(n)


def kappa(c: Cell2, n: int) -> PairVector:
    """
    Z_2 cocycle on R_2:

        C(i,j)      ḡ_{i,j}
        D(i,j,k,ℓ)  ḡ_{i,k} + ḡ_{k,j} + ḡ_{i,ℓ} + ḡ_{ℓ,j}   if i<k<j<ℓ or k<i<ℓ<j
        E(i,k,j)    ḡ_{i,j} + ḡ_{j,k}                    if i<k<j, j<i<k or k<j<i
        0 otherwise
    """
    _check_degree(c, n)
    if c.kind == C:
        i, j = c.indices
        return _e(n, i, j, Z2)
    if c.kind == D:
        i, j, k, l = c.indices
        if i < k < j < l or k < i < l < j:
            return vector_sum(n, (_e(n, i, k, Z2), _e(n, k, j, Z2), _e(n, i, l, Z2), _e(n, l, j, Z2)), Z2)
        return PairVector.zero(n, Z2)
    i, k, j = c.indices
    if i < k < j or j < i < k or k < j < i:
        return _e(n, i, j, Z2) + _e(n, j, k, Z2)
    return PairVector.zero(n, Z2)


def eta(v: PairVector) -> PairVector:
    """Reduction Z → Z_2, coefficientwise."""
    return v.to_ring(Z2)


def cocycle_via_section(c: Cell2, n: int, ring: RingTag = GN) -> PairVector:
    """
    The cocycle of the chosen section pulled back along γ2:

        C(i,j)      c(σ_{i,j}, σ_{i,j})
        D(i,j,k,ℓ)  c(σ_{i,j}, σ_{k,ℓ}) − c(σ_{k,ℓ}, σ_{i,j})
        E(i,k,j)    c(σ_{i,j}, σ_{j,k}) − c(σ_{i,k}, σ_{i,j})

    with c the bar cocycle of ext_groups.
    """
    _check_degree(c, n)
    return evaluate_bar_cochain(gamma(c, n), lambda p, q: bar_cocycle(p, q, ring), ring)


def evaluate_bar_cochain(x: FreeModElem, cochain, ring: RingTag) -> PairVector:
    """
    Apply a ZS_n-equivariant cochain on P̄_2 given by its values on [p|q]:
    Σ r_{p,q}[p|q] ↦ Σ r_{p,q} ⋆ cochain(p, q).
    """
    total = PairVector.zero(x.n, ring.kind)
    for label, coeff in x.terms:
        p, q = label.entries
        value = cochain(p, q)
        for g, a in coeff.terms:
            total = total + act(g, value).scale(a)
    return total


def evaluate_one_cochain(x: FreeModElem, values: Mapping[UPair, PairVector], ring: RingTag = GN) -> PairVector:
    """h(Σ r_{i,j} x̃_{i,j}) = Σ r_{i,j} ⋆ h_{i,j} for h given on the 1-cells."""
    total = PairVector.zero(x.n, ring.kind)
    for label, coeff in x.terms:
        value = values[label.pair]
        for g, a in coeff.terms:
            total = total + act(g, value).scale(a)
    return total


def _shifted_section_cocycle(c: Cell2, n: int, shift: Mapping[UPair, PairVector]) -> PairVector:
    """
    Cocycle of the section s'(σ_{i,j}) = ι(h_{i,j})·s(σ_{i,j}) evaluated on c through
    γ2, computed with the group law.
    """
    def lift(pair: UPair) -> ExtElement:
        swap = _sigma(n, pair.lo, pair.hi)
        return ExtElement(swap, theta(swap, shift[pair]), GN)

    def section_cocycle(a: UPair, b: UPair) -> PairVector:
        # a product of two transpositions is even, so s' agrees with s on it
        lhs = ext_mul(lift(a), lift(b))
        return ext_mul(lhs, ext_inv(section_element(lhs.perm, GN))).vec

    if c.kind == C:
        i, j = c.indices
        return section_cocycle(UPair(i, j), UPair(i, j))
    if c.kind == D:
        i, j, k, l = c.indices
        a, b = UPair(i, j), UPair(k, l)
        return section_cocycle(a, b) - section_cocycle(b, a)
    i, k, j = c.indices
    return section_cocycle(UPair(i, j), UPair(j, k)) - section_cocycle(UPair(i, k), UPair(i, j))


def coboundary_shift_check(n: int, seed: int = 0, bound: int = 3) -> Dict:
    """
    Shift the section on transpositions by random integers h_{i,j}·e and recompute
    its cocycle through γ2. The result must be φ + h∘∂2 on every cell, where h is
    extended to R_1 equivariantly.
    """
    rng = np.random.default_rng(seed)
    pairs = all_pairs(n)
    shift = {
        pair: PairVector(n, tuple(int(x) for x in rng.integers(-bound, bound + 1, size=len(pairs))), Z)
        for pair in pairs
    }
    rows = []
    for cell in all_cells(n):
        shifted = _shifted_section_cocycle(cell, n, shift)
        expected = phi(cell, n) + evaluate_one_cochain(boundary_R2(cell, n), shift)
        rows.append({"cell": format_cell(cell), "pass": shifted == expected,
                     "shifted": shifted.to_json(), "expected": expected.to_json()})
    logger.debug(f"Coboundary shift at n={n}, seed={seed}: {len(rows)} cells")
    return {"suite": "coboundary", "n": n, "seed": seed, "rows": rows}


def closed_form_check(n: int) -> Dict:
    """cocycle_via_section against φ over Z, against κ over Z_2, and η∘φ = κ."""
    rows = []
    for cell in all_cells(n):
        over_z = cocycle_via_section(cell, n, GN)
        over_z2 = cocycle_via_section(cell, n, ZN)
        phi_value = phi(cell, n)
        kappa_value = kappa(cell, n)
        rows.append({
            "cell": format_cell(cell),
            "phi": over_z == phi_value,
            "kappa": over_z2 == kappa_value,
            "eta": eta(phi_value) == kappa_value,
            "pass": over_z == phi_value and over_z2 == kappa_value and eta(phi_value) == kappa_value,
            "value": phi_value.to_json(),
        })
    return {"suite": "closed-forms", "n": n, "rows": rows}
