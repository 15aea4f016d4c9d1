from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from modbraid.algebra.braid_words import BraidLetter, commutator, concat, invert, perm_of, word
from modbraid.algebra.perm_core import UPair, all_pairs, pair_action, transposition
from modbraid.algebra.strand_diagram import (
    Z, Z2, PairVector, crossing_counts, is_pure, pair_count, pair_index, push_forward, winding_vector,
)
from modbraid.errors import NotPure, RingMismatch


def B(i, j, e=1):
    return BraidLetter.band(i, j, e)


def e(n, i, j):
    return PairVector.basis(n, i, j)


def pure_generators(n):
    return [word(n, [B(a.lo, a.hi), B(a.lo, a.hi)]) for a in all_pairs(n)]


def pure_words(n, max_size=5):
    gens = st.sampled_from(pure_generators(n))
    signs = st.sampled_from([1, -1])
    return st.lists(st.tuples(gens, signs), max_size=max_size).map(
        lambda items: _product(n, [g if s == 1 else invert(g) for g, s in items]))


def _product(n, words):
    result = word(n)
    for w in words:
        result = concat(result, w)
    return result


def band_words(n, max_size=6):
    pairs = st.sampled_from(all_pairs(n))
    letters = st.builds(lambda p, s: B(p.lo, p.hi, s), pairs, st.sampled_from([1, -1]))
    return st.lists(letters, max_size=max_size).map(lambda ls: word(n, ls))


def test_pair_index_is_lexicographic():
    assert [pair_index(4, p) for p in all_pairs(4)] == list(range(pair_count(4)))
    assert pair_count(1) == 0


def test_pair_vector_ring_arithmetic():
    v = PairVector.from_mapping(3, {UPair(1, 2): 3, UPair(2, 3): -1})
    assert v.to_json() == {"1,2": 3, "2,3": -1}
    assert v.to_ring(Z2).to_json() == {"1,2": 1, "2,3": 1}
    assert (v - v).is_zero()
    with pytest.raises(RingMismatch):
        v + v.to_ring(Z2)
    with pytest.raises(RingMismatch):
        v.to_ring(Z2).to_ring(Z)


def test_crossing_count_examples():
    assert crossing_counts(word(2, [BraidLetter.b(1)])).to_json() == {"1,2": 1}
    assert crossing_counts(word(2, [BraidLetter.b(1, -1)])).to_json() == {"1,2": -1}
    w = commutator(word(4, [B(1, 3)]), word(4, [B(2, 4)]))
    assert crossing_counts(w).to_json() == {"1,2": 2, "1,4": -2, "2,3": -2, "3,4": 2}


def test_is_pure_examples():
    assert not is_pure(word(2, [BraidLetter.b(1)]))
    assert is_pure(word(2, [BraidLetter.b(1), BraidLetter.b(1)]))
    assert is_pure(word(3, [B(1, 3), B(2, 3), B(1, 3, -1), B(1, 2, -1)]))


def test_winding_examples():
    assert winding_vector(word(2, [B(1, 2), B(1, 2)])) == e(2, 1, 2)
    assert winding_vector(word(3, [B(1, 3), B(2, 3), B(1, 3, -1), B(1, 2, -1)])) == e(3, 1, 3) - e(3, 2, 3)
    conjugated = word(3, [BraidLetter.b(1), B(2, 3), B(2, 3), BraidLetter.b(1, -1)])
    assert winding_vector(conjugated) == e(3, 1, 3)


def test_winding_needs_pure_braid():
    with pytest.raises(NotPure):
        winding_vector(word(3, [BraidLetter.b(2)]))


@given(pure_words(4), pure_words(4))
def test_winding_is_additive(u, v):
    assert winding_vector(concat(u, v)) == winding_vector(u) + winding_vector(v)


@given(pure_words(4))
def test_winding_of_inverse(w):
    assert winding_vector(invert(w)) == -winding_vector(w)


@given(band_words(4), pure_words(4))
def test_conjugation_covariance(a, k):
    conjugated = winding_vector(concat(concat(invert(a), k), a))
    original = winding_vector(k)
    pi = perm_of(a)
    for x in all_pairs(4):
        assert conjugated[pair_action(pi, x)] == original[x]


def test_push_forward_moves_coefficients():
    v = PairVector.from_mapping(3, {UPair(1, 3): 5})
    assert push_forward(transposition(3, 1, 2), v).to_json() == {"2,3": 5}


# Winding vectors of the small pictures behind the relation tables, over every index
# pattern up to n = 6.

FIXTURE_DEGREES = [3, 4, 5, 6]


@pytest.mark.parametrize("n", FIXTURE_DEGREES)
def test_fixture_triangle_relation(n):
    """B_ij B_jk B_ij^-1 B_ik^-1 winds e_ij - e_kj exactly in the three cyclic orders."""
    for i, k, j in permutations(range(1, n + 1), 3):
        w = word(n, [B(i, j), B(j, k), B(i, j, -1), B(i, k, -1)])
        if i < k < j or j < i < k or k < j < i:
            expected = e(n, i, j) - e(n, k, j)
        else:
            expected = PairVector.zero(n)
        assert winding_vector(w) == expected, (i, k, j)


@pytest.mark.parametrize("n", FIXTURE_DEGREES)
def test_fixture_conjugated_square(n):
    """B_a B_b^2 B_a^-1 winds e along σ_a(b)."""
    for a in all_pairs(n):
        swap = transposition(n, a.lo, a.hi)
        for b_ in all_pairs(n):
            w = word(n, [B(a.lo, a.hi), B(b_.lo, b_.hi), B(b_.lo, b_.hi), B(a.lo, a.hi, -1)])
            image = pair_action(swap, b_)
            assert winding_vector(w) == e(n, image.lo, image.hi), (a, b_)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_fixture_disjoint_commutator(n):
    for a in all_pairs(n):
        for b_ in all_pairs(n):
            if not a.disjoint(b_):
                continue
            i, j, k, l = a.lo, a.hi, b_.lo, b_.hi
            w = commutator(word(n, [B(i, j)]), word(n, [B(k, l)]))
            if i < k < j < l:
                expected = e(n, i, k) - e(n, i, l) - e(n, j, k) + e(n, j, l)
            elif k < i < l < j:
                expected = -e(n, k, i) + e(n, k, j) + e(n, i, l) - e(n, l, j)
            else:
                expected = PairVector.zero(n)
            assert winding_vector(w) == expected, (a, b_)
