"""
Finite presentations ⟨S | R⟩: a small text format, relator normalization, builders
for the presentations of S_n, B_n, the extensions and the level-4 quotient, and
the generic presentation of an extension from presentations of its kernel and
quotient.

Text format:

    gens: a, b;
    rels: a^2, [a,b], (a b)^3, a b a^-1 b^-1;

[x,y] expands to x y x^-1 y^-1, ^k repeats (negative k repeats the inverse), and
# starts a comment that runs to the end of the line.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from parsimonious.exceptions import ParseError as GrammarError
from parsimonious.grammar import Grammar
from parsimonious.nodes import NodeVisitor

from modbraid.algebra.braid_words import BraidWord, artin_expand, band_expand
from modbraid.algebra.ext_groups import ZN, ExtElement, ext_inv, ext_mul, generator_elements
from modbraid.algebra.perm_core import UPair, all_pairs
from modbraid.algebra.relation_tables import (
    KERNEL, TABLE1, TABLE2, TABLE3, SymWord, table_relations,
)
from modbraid.errors import MissingCoverage, ParseError

logger = logging.getLogger(__name__)

Letter = Tuple[str, int]
Relator = Tuple[Letter, ...]


@dataclass(frozen=True)
class Presentation:
    """Generators by name; relators are words of (name, ±1) letters."""

    generators: Tuple[str, ...]
    relators: Tuple[Relator, ...] = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        declared = set(self.generators)
        for relator in self.relators:
            for name, exponent in relator:
                if name not in declared:
                    raise ValueError(f"relator letter {name!r} is not a declared generator")
                if exponent not in (1, -1):
                    raise ValueError(f"relator letters carry exponent ±1, got {exponent}")

    def __str__(self) -> str:
        return format_presentation(self)


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

def invert_relator(word: Sequence[Letter]) -> Relator:
    return tuple((name, -exponent) for name, exponent in reversed(word))


def power_relator(word: Sequence[Letter], k: int) -> Relator:
    base = tuple(word) if k >= 0 else invert_relator(word)
    return base * abs(k)


def commutator_relator(u: Sequence[Letter], v: Sequence[Letter]) -> Relator:
    return tuple(u) + tuple(v) + invert_relator(u) + invert_relator(v)


def free_reduce_relator(word: Sequence[Letter]) -> Relator:
    stack: List[Letter] = []
    for name, exponent in word:
        if stack and stack[-1] == (name, -exponent):
            stack.pop()
        else:
            stack.append((name, exponent))
    return tuple(stack)


def cyclic_reduce_relator(word: Sequence[Letter]) -> Relator:
    word = free_reduce_relator(word)
    start, end = 0, len(word)
    while end - start >= 2 and word[start] == (word[end - 1][0], -word[end - 1][1]):
        start += 1
        end -= 1
    return word[start:end]


def normalize_relator(word: Sequence[Letter]) -> Relator:
    """
    Canonical representative up to free reduction, cyclic rotation and inversion:
    the smallest rotation of the cyclically reduced word or of its inverse.
    """
    reduced = cyclic_reduce_relator(word)
    if not reduced:
        return ()
    candidates = []
    for w in (reduced, invert_relator(reduced)):
        candidates.extend(w[k:] + w[:k] for k in range(len(w)))
    return min(candidates)


def relator_set(relators: Iterable[Sequence[Letter]]) -> frozenset:
    return frozenset(r for r in (normalize_relator(w) for w in relators) if r)


def relator_set_equal(a: Presentation, b: Presentation) -> bool:
    """Same generators and the same relators up to normalization."""
    return set(a.generators) == set(b.generators) and relator_set(a.relators) == relator_set(b.relators)


def add_relators(pres: Presentation, relators: Iterable[Sequence[Letter]], name: Optional[str] = None) -> Presentation:
    return Presentation(pres.generators, pres.relators + tuple(tuple(r) for r in relators),
                        name if name is not None else pres.name)


# ---------------------------------------------------------------------------
# Text format
# ---------------------------------------------------------------------------

GRAMMAR = Grammar(r"""
    presentation = ws gens ws sep ws rels ws sep? ws
    gens         = "gens" ws ":" ws names
    names        = name more_names
    more_names   = (ws "," ws name)*
    rels         = "rels" ws ":" ws relators?
    relators     = word more_words
    more_words   = (ws "," ws word)*
    word         = factor more_factors
    more_factors = (ws factor)*
    factor       = atom power?
    atom         = commutator / group / name
    commutator   = "[" ws word ws "," ws word ws "]"
    group        = "(" ws word ws ")"
    power        = ws "^" ws integer
    integer      = ~"-?[0-9]+"
    name         = ~"[A-Za-z_][A-Za-z0-9_]*"
    sep          = ";"
    ws           = ~r"(?:\s|#[^\n]*)*"
""")


def _line_column(text: str, position: int) -> Tuple[int, int]:
    line = text.count("\n", 0, position) + 1
    column = position - (text.rfind("\n", 0, position) + 1) + 1
    return line, column


class _PresentationVisitor(NodeVisitor):
    """Builds (generators, relators) bottom-up from the parse tree."""

    unwrapped_exceptions = (ParseError,)

    def __init__(self, text: str):
        self.text = text
        self.generators: Tuple[str, ...] = ()

    def visit_presentation(self, node, children):
        return children[1], children[5]

    def visit_gens(self, node, children):
        names = children[4]
        duplicates = {x for x in names if names.count(x) > 1}
        if duplicates:
            line, column = _line_column(self.text, node.start)
            raise ParseError(f"duplicate generators {sorted(duplicates)}", line, column)
        self.generators = tuple(names)
        return self.generators

    def visit_names(self, node, children):
        return [children[0]] + children[1]

    def visit_more_names(self, node, children):
        return [item[3] for item in children]

    def visit_rels(self, node, children):
        optional = children[4]
        return optional[0] if isinstance(optional, list) else []

    def visit_relators(self, node, children):
        return [children[0]] + children[1]

    def visit_more_words(self, node, children):
        return [item[3] for item in children]

    def visit_word(self, node, children):
        letters = list(children[0])
        for factor in children[1]:
            letters.extend(factor)
        return tuple(letters)

    def visit_more_factors(self, node, children):
        return [item[1] for item in children]

    def visit_factor(self, node, children):
        atom, power = children
        if isinstance(power, list):
            return power_relator(atom, power[0])
        return atom

    def visit_atom(self, node, children):
        inner = children[0]
        if isinstance(inner, str):
            if inner not in self.generators:
                line, column = _line_column(self.text, node.start)
                raise ParseError(f"undeclared generator {inner!r}", line, column)
            return ((inner, 1),)
        return inner

    def visit_commutator(self, node, children):
        return commutator_relator(children[2], children[6])

    def visit_group(self, node, children):
        return children[2]

    def visit_power(self, node, children):
        return children[3]

    def visit_integer(self, node, children):
        return int(node.text)

    def visit_name(self, node, children):
        return node.text

    def visit_ws(self, node, children):
        return None

    def visit_sep(self, node, children):
        return None

    def generic_visit(self, node, children):
        return children or node


def parse_presentation(text: str, name: str = "") -> Presentation:
    """
    Raises:
        ParseError: with the 1-based line and column of the failure
    """
    try:
        tree = GRAMMAR.parse(text)
    except GrammarError as e:
        raise ParseError("malformed presentation", e.line(), e.column())
    generators, relators = _PresentationVisitor(text).visit(tree)
    return Presentation(tuple(generators), tuple(relators), name)


def _format_word(word: Relator) -> str:
    tokens = []
    k = 0
    while k < len(word):
        run = 1
        while k + run < len(word) and word[k + run] == word[k]:
            run += 1
        name, exponent = word[k]
        power = run * exponent
        tokens.append(name if power == 1 else f"{name}^{power}")
        k += run
    return " ".join(tokens)


def format_presentation(pres: Presentation) -> str:
    rels = ", ".join(_format_word(r) for r in pres.relators if r)
    return f"gens: {', '.join(pres.generators)};\nrels: {rels};\n"


def load_presentation(path) -> Presentation:
    path = Path(path)
    logger.debug(f"Loading presentation from {path}")
    return parse_presentation(path.read_text(encoding="utf-8"), name=path.stem)


# ---------------------------------------------------------------------------
# Builders
# ---------------------------------------------------------------------------

def _pair_name(prefix: str, pair: UPair) -> str:
    return f"{prefix}{pair.lo}_{pair.hi}"


def _sname(i: int, j: int) -> str:
    return _pair_name("s", UPair(i, j))


def _gname(i: int, j: int) -> str:
    return _pair_name("g", UPair(i, j))


def _inv(name: str) -> Letter:
    return (name, -1)


def symbols_to_relator(symbols: SymWord) -> Relator:
    """s^±1 ↦ one letter; g^e ↦ |e| letters of sign e."""
    letters: List[Letter] = []
    for letter in symbols:
        sign = 1 if letter.exponent > 0 else -1
        letters.extend([(letter.name, sign)] * (abs(letter.exponent) if letter.kind == KERNEL else 1))
    return tuple(letters)


def braid_word_to_relator(w: BraidWord) -> Relator:
    """Artin letters b_i^±1 as (b{i}, ±1); band letters are expanded first."""
    return tuple((f"b{letter.index}", letter.exponent) for letter in artin_expand(w).letters)


def _artin_braid_relators(n: int, prefix: str = "b") -> List[Relator]:
    relators = []
    for i in range(1, n - 1):
        x, y = f"{prefix}{i}", f"{prefix}{i + 1}"
        relators.append(((x, 1), (y, 1), (x, 1), (y, -1), (x, -1), (y, -1)))
    for i in range(1, n):
        for j in range(i + 2, n):
            relators.append(commutator_relator(((f"{prefix}{i}", 1),), ((f"{prefix}{j}", 1),)))
    return relators


def sn3_presentation(n: int, t: int = 1) -> Presentation:
    """Coxeter presentation of S_n on the adjacent transpositions s1, …, s{n-1}."""
    generators = tuple(f"s{i}" for i in range(1, n))
    relators = [((g, 1), (g, 1)) for g in generators] + _artin_braid_relators(n, "s")
    return Presentation(generators, tuple(relators), "sn3")


def sn4_presentation(n: int, t: int = 1) -> Presentation:
    """
    S_n on all transpositions: squares, commuting disjoint pairs, and for every
    ordered triple of distinct indices the conjugation σ_{i,j}^{±1}σ_{j,k}σ_{i,j}^{∓1} = σ_{i,k}
    in the orientation the extension tables use.
    """
    pairs = all_pairs(n)
    generators = tuple(_pair_name("s", a) for a in pairs)
    relators: List[Relator] = [((g, 1), (g, 1)) for g in generators]
    for a in pairs:
        for b in pairs:
            if a.disjoint(b):
                relators.append(commutator_relator(((_pair_name("s", a), 1),), ((_pair_name("s", b), 1),)))
    for row in table_relations(TABLE1, n):
        if row.row in ("R3", "R4"):
            i, j, k = row.indices
            sign = 1 if row.row == "R3" else -1
            relators.append(((_sname(i, j), sign), (_sname(j, k), 1), (_sname(i, j), -sign), _inv(_sname(i, k))))
    return Presentation(generators, tuple(relators), "sn4")


def bn2_presentation(n: int, t: int = 1) -> Presentation:
    """Artin presentation of B_n."""
    generators = tuple(f"b{i}" for i in range(1, n))
    return Presentation(generators, tuple(_artin_braid_relators(n)), "bn2")


def _bands_commute(a: UPair, b: UPair) -> bool:
    i, j, k, l = a.lo, a.hi, b.lo, b.hi
    return (j - k) * (j - l) * (i - k) * (i - l) > 0


def bn5_presentation(n: int, t: int = 1) -> Presentation:
    """Band presentation of B_n on b{i}_{j}."""
    pairs = all_pairs(n)
    generators = tuple(_pair_name("b", a) for a in pairs)
    relators: List[Relator] = []
    for x, a in enumerate(pairs):
        for b in pairs[x + 1:]:
            if _bands_commute(a, b):
                relators.append(commutator_relator(((_pair_name("b", a), 1),), ((_pair_name("b", b), 1),)))
    for row in table_relations(TABLE1, n):
        if row.row in ("R3", "R4"):
            i, j, k = row.indices
            bij, bjk, bik = (_pair_name("b", UPair(*x)) for x in ((i, j), (j, k), (i, k)))
            sign = 1 if row.row == "R3" else -1
            relators.append(((bij, sign), (bjk, 1), (bij, -sign), _inv(bik)))
    return Presentation(generators, tuple(relators), "bn5")


def _squared_band(i: int, j: int, n: int) -> BraidWord:
    band = band_expand(UPair(i, j), n)
    return band + band


def pres11_presentation(n: int, t: int = 1) -> Presentation:
    """
    B_n / B_n[4] on the Artin generators: the braid relations together with the
    normal generators of the level-4 subgroup set to 1.
    """
    generators = tuple(f"b{i}" for i in range(1, n))
    relators: List[Relator] = [((g, 1),) * 4 for g in generators]
    for i in range(1, n - 1):
        relators.append(commutator_relator(((f"b{i}", 1),) * 2, ((f"b{i + 1}", 1),) * 2))
    for i in range(1, n - 3):
        relators.append(commutator_relator(braid_word_to_relator(_squared_band(i, i + 2, n)),
                                           braid_word_to_relator(_squared_band(i + 1, i + 3, n))))
    relators.extend(_artin_braid_relators(n))
    return Presentation(generators, tuple(relators), "pres11")


def kernel_presentation(n: int, t: int = 1) -> Presentation:
    """Z_2^(n choose 2) on g{i}_{j}: squares and commutators."""
    pairs = all_pairs(n)
    generators = tuple(_pair_name("g", a) for a in pairs)
    relators: List[Relator] = [((g, 1), (g, 1)) for g in generators]
    for x, a in enumerate(generators):
        for b in generators[x + 1:]:
            relators.append(commutator_relator(((a, 1),), ((b, 1),)))
    return Presentation(generators, tuple(relators), "kernel")


def _table_presentation(table: str, n: int, t: int) -> Presentation:
    pairs = all_pairs(n)
    generators = tuple(_pair_name("g", a) for a in pairs) + tuple(_pair_name("s", a) for a in pairs)
    relators = tuple(symbols_to_relator(row.relator) for row in table_relations(table, n, t))
    return Presentation(generators, relators, table if table != TABLE2 else f"{table}(t={t})")


def table1_presentation(n: int, t: int = 1) -> Presentation:
    return _table_presentation(TABLE1, n, 1)


def table2_presentation(n: int, t: int = 1) -> Presentation:
    return _table_presentation(TABLE2, n, t)


def table3_presentation(n: int, t: int = 1) -> Presentation:
    return _table_presentation(TABLE3, n, 1)


BUILTINS: Dict[str, Callable[[int, int], Presentation]] = {
    "sn3": sn3_presentation,
    "sn4": sn4_presentation,
    "bn2": bn2_presentation,
    "bn5": bn5_presentation,
    "pres11": pres11_presentation,
    "kernel": kernel_presentation,
    "table1": table1_presentation,
    "table2": table2_presentation,
    "table3": table3_presentation,
}


def build_builtin_presentation(which: str, n: int, t: int = 1) -> Presentation:
    """Look up a builtin presentation by name and instantiate it at degree n."""
    try:
        builder = BUILTINS[which]
    except KeyError:
        raise ValueError(f"unknown presentation {which!r}; choose from {', '.join(BUILTINS)}")
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    return builder(n, t)


def kill_kernel(pres: Presentation, n: int) -> Presentation:
    """Add g{i}_{j} = 1 for every pair."""
    return add_relators(pres, [((_pair_name("g", a), 1),) for a in all_pairs(n)], f"{pres.name}/kernel")


# ---------------------------------------------------------------------------
# Extensions
# ---------------------------------------------------------------------------

def build_extension_presentation(
    pres_k: Presentation,
    pres_q: Presentation,
    lift: Optional[Mapping[str, Relator]] = None,
    conj: Optional[Mapping[Tuple[str, str, int], Relator]] = None,
    lifted_rel_values: Optional[Mapping[Relator, Relator]] = None,
) -> Presentation:
    """
    Presentation of an extension K → G → Q on S_K ∪ S_Q.

    Relators are R_K, then each Q-relator r written through the lift and corrected
    by its value in K (lift(r)·k_r^{-1}), then q^ε k q^{-ε}·x^{-1} for every
    Q-generator q, K-generator k and ε = ±1.

    Args:
        lift: Q-generator ↦ word over S_Q (defaults to the generator itself)
        conj: (q, k, ε) ↦ K-word x with q^ε k q^{-ε} = x
        lifted_rel_values: Q-relator ↦ K-word k_r

    Raises:
        MissingCoverage: if conj or lifted_rel_values leaves a case out
    """
    overlap = set(pres_k.generators) & set(pres_q.generators)
    if overlap:
        raise ValueError(f"kernel and quotient share generator names {sorted(overlap)}")
    lift = dict(lift or {})
    conj = dict(conj or {})
    values = dict(lifted_rel_values or {})
    for q in pres_q.generators:
        lift.setdefault(q, ((q, 1),))

    missing = [f"conj[{q},{k},{s:+d}]" for q in pres_q.generators for k in pres_k.generators
               for s in (1, -1) if (q, k, s) not in conj]
    missing += [f"value[{_format_word(r)}]" for r in pres_q.relators if r not in values]
    if missing:
        shown = ", ".join(missing[:5]) + (" …" if len(missing) > 5 else "")
        raise MissingCoverage(f"{len(missing)} extension data entries missing: {shown}")

    def lifted(word: Sequence[Letter]) -> Relator:
        letters: List[Letter] = []
        for name, exponent in word:
            image = lift[name]
            letters.extend(image if exponent == 1 else invert_relator(image))
        return tuple(letters)

    relators: List[Relator] = list(pres_k.relators)
    for r in pres_q.relators:
        relators.append(lifted(r) + invert_relator(values[r]))
    for q in pres_q.generators:
        for k in pres_k.generators:
            for s in (1, -1):
                q_s = lifted(((q, s),))
                relators.append(q_s + ((k, 1),) + invert_relator(q_s) + invert_relator(conj[(q, k, s)]))
    return Presentation(pres_k.generators + pres_q.generators, tuple(relators), "extension")


def _evaluate(word: Sequence[Letter], elements: Mapping[str, ExtElement], n: int) -> ExtElement:
    result = ExtElement.identity(n, ZN)
    for name, exponent in word:
        x = elements[name]
        result = ext_mul(result, x if exponent == 1 else ext_inv(x))
    return result


def _kernel_word(element: ExtElement) -> Relator:
    if not element.perm.is_identity():
        raise ValueError(f"{element} is not in the kernel")
    return tuple((_pair_name("g", pair), 1) for pair, _ in element.vec.items())


def zn_extension_data(n: int):
    """
    Kernel and quotient presentations of Z_n, with conjugation and lifted-relator
    values computed by multiplying in Z_n.

    Returns:
        (pres_k, pres_q, lift, conj, lifted_rel_values)
    """
    pres_k = kernel_presentation(n)
    pres_q = sn4_presentation(n)
    elements = generator_elements(n, ZN)
    conj = {}
    for q in pres_q.generators:
        for k in pres_k.generators:
            for s in (1, -1):
                conj[(q, k, s)] = _kernel_word(_evaluate(((q, s), (k, 1), (q, -s)), elements, n))
    values = {r: _kernel_word(_evaluate(r, elements, n)) for r in pres_q.relators}
    return pres_k, pres_q, None, conj, values


def zn_extension_presentation(n: int) -> Presentation:
    return build_extension_presentation(*zn_extension_data(n))
