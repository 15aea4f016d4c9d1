import pytest
from hypothesis import given, strategies as st

from modbraid.algebra.perm_core import (
    Permutation, UPair, all_pairs, all_permutations, compose, format_permutation, identity,
    inverse, normal_form, pair_action, pair_normal_form, parse_permutation, transposition,
)
from modbraid.errors import DegreeMismatch, ParseError


def permutations_of(n):
    return st.permutations(list(range(1, n + 1))).map(lambda images: Permutation(tuple(images)))


def test_upair_canonicalizes_order():
    assert UPair(3, 1) == UPair(1, 3)
    assert UPair(3, 1).lo == 1
    with pytest.raises(ValueError):
        UPair(2, 2)


def test_compose_examples():
    p = transposition(3, 1, 2)
    assert compose(identity(3), p) == p
    assert compose(p, p) == identity(3)
    assert compose(transposition(3, 1, 2), transposition(3, 1, 3)) == Permutation((2, 3, 1))


def test_compose_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        compose(identity(2), identity(3))


def test_normal_form_examples():
    assert normal_form(identity(4)).factors == ()
    assert normal_form(transposition(3, 1, 3)).factors == (UPair(1, 3),)
    assert normal_form(Permutation((2, 3, 1))).factors == (UPair(1, 2), UPair(1, 3))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_normal_form_reproduces_every_permutation(n):
    for p in all_permutations(n):
        word = normal_form(p)
        assert word.to_permutation() == p
        assert len(word) <= n - 1
        tops = [f.hi for f in word.factors]
        assert tops == sorted(set(tops))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_pair_normal_form_matches_algorithm(n):
    for a in all_pairs(n):
        for b in all_pairs(n):
            expected = normal_form(compose(transposition(n, a.lo, a.hi), transposition(n, b.lo, b.hi)))
            assert pair_normal_form(n, a, b).factors == expected.factors, (a, b)


def test_pair_normal_form_examples():
    assert pair_normal_form(4, UPair(1, 2), UPair(3, 4)).factors == (UPair(1, 2), UPair(3, 4))
    assert pair_normal_form(4, UPair(3, 4), UPair(1, 2)).factors == (UPair(1, 2), UPair(3, 4))
    assert pair_normal_form(3, UPair(1, 2), UPair(1, 3)).factors == (UPair(1, 2), UPair(1, 3))
    assert pair_normal_form(3, UPair(1, 2), UPair(1, 2)).factors == ()


def test_pair_action_examples():
    assert pair_action(identity(3), UPair(1, 3)) == UPair(1, 3)
    assert pair_action(transposition(3, 1, 2), UPair(1, 3)) == UPair(2, 3)
    assert pair_action(transposition(4, 1, 2), UPair(3, 4)) == UPair(3, 4)


@given(permutations_of(5), permutations_of(5), st.sampled_from(all_pairs(5)))
def test_pair_action_is_an_action(p, q, x):
    assert pair_action(compose(p, q), x) == pair_action(q, pair_action(p, x))


@given(permutations_of(6))
def test_inverse_cancels(p):
    assert compose(p, inverse(p)) == identity(6)
    assert compose(inverse(p), p) == identity(6)


def test_all_permutations_is_lexicographic():
    perms = list(all_permutations(3))
    assert len(perms) == 6
    assert perms[0] == identity(3)
    assert [p.images for p in perms] == sorted(p.images for p in perms)


def test_parse_and_format():
    assert parse_permutation("[2,3,1]") == Permutation((2, 3, 1))
    assert parse_permutation(" [ 2, 1 ] ", 2) == transposition(2, 1, 2)
    assert parse_permutation("s(1,3)", 4) == transposition(4, 1, 3)
    assert format_permutation(Permutation((2, 3, 1))) == "[2,3,1]"


@pytest.mark.parametrize("text", ["[1,1]", "[]", "2,1", "s(1,3)", "s(2,2)"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_permutation(text)


def test_parse_checks_degree():
    with pytest.raises(DegreeMismatch):
        parse_permutation("[2,1]", 3)
