import pytest
from hypothesis import given, strategies as st

from modbraid.algebra.braid_words import (
    BraidLetter, BraidWord, artin_expand, band_expand, commutator, concat, format_word,
    free_reduce, invert, parse_word, perm_of, power, word,
)
from modbraid.algebra.perm_core import UPair, all_pairs, compose, identity, inverse, transposition
from modbraid.errors import DegreeMismatch, ParseError


def b(i, e=1):
    return BraidLetter.b(i, e)


def band(i, j, e=1):
    return BraidLetter.band(i, j, e)


def artin_words(n, max_size=12):
    letters = st.builds(BraidLetter.b, st.integers(1, n - 1), st.sampled_from([1, -1]))
    return st.lists(letters, max_size=max_size).map(lambda ls: word(n, ls))


def band_words(n, max_size=8):
    pairs = st.sampled_from(all_pairs(n))
    letters = st.builds(lambda p, e: BraidLetter.band(p.lo, p.hi, e), pairs, st.sampled_from([1, -1]))
    return st.lists(letters, max_size=max_size).map(lambda ls: word(n, ls))


def test_band_expand_examples():
    assert band_expand(UPair(2, 3), 4).letters == (b(2),)
    assert band_expand(UPair(1, 3), 3).letters == (b(1), b(2), b(1, -1))
    assert band_expand(UPair(2, 4), 4).letters == (b(2), b(3), b(2, -1))


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_band_expand_length_and_permutation(n):
    for pair in all_pairs(n):
        w = band_expand(pair, n)
        assert len(w) == 2 * (pair.hi - pair.lo) - 1
        assert perm_of(w) == transposition(n, pair.lo, pair.hi)
        assert perm_of(word(n, [band(pair.lo, pair.hi)])) == transposition(n, pair.lo, pair.hi)


def test_word_ops():
    assert invert(word(3, [b(1), b(2)])).letters == (b(2, -1), b(1, -1))
    assert free_reduce(word(3, [b(1), b(1, -1)])).letters == ()
    assert free_reduce(word(3, [b(1), b(2), b(2, -1), b(1, -1), b(2)])).letters == (b(2),)
    assert concat(word(2, [b(1)]), word(2, [b(1)])).letters == (b(1), b(1))
    assert power(word(2, [b(1)]), -2).letters == (b(1, -1), b(1, -1))
    assert commutator(word(3, [b(1)]), word(3, [b(2)])).letters == (b(1), b(2), b(1, -1), b(2, -1))


def test_concat_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        concat(word(2), word(3))


def test_letters_must_fit_degree():
    with pytest.raises(ValueError):
        word(3, [b(3)])
    with pytest.raises(ValueError):
        BraidLetter.b(1, 2)


def test_perm_of_examples():
    assert perm_of(word(4)) == identity(4)
    assert perm_of(word(2, [b(1)])) == transposition(2, 1, 2)
    full_twist = word(3, [band(1, 3), band(1, 3)])
    assert perm_of(full_twist) == identity(3)


@given(artin_words(5), artin_words(5))
def test_perm_of_is_a_homomorphism(u, v):
    assert perm_of(concat(u, v)) == compose(perm_of(u), perm_of(v))


@given(band_words(5))
def test_perm_of_inverse(w):
    assert perm_of(invert(w)) == inverse(perm_of(w))
    assert perm_of(artin_expand(w)) == perm_of(w)


def test_artin_length_counts_expansion():
    w = word(4, [band(1, 4), b(2)])
    assert w.artin_length() == len(artin_expand(w)) == 6


def test_parse_word_grammar():
    w = parse_word("b3 b3^-1 B(1,4) B(1,4)^-1", 4)
    assert w.letters == (b(3), b(3, -1), band(1, 4), band(1, 4, -1))
    assert parse_word("g(1,4)", 4).letters == (band(1, 4), band(1, 4))
    assert parse_word("g(1,4)^-1", 4).letters == (band(1, 4, -1), band(1, 4, -1))
    assert parse_word("", 3) == BraidWord(3, ())


def test_parse_word_reports_column():
    with pytest.raises(ParseError) as excinfo:
        parse_word("b1 x2", 3)
    assert excinfo.value.column == 4


@pytest.mark.parametrize("text", ["b0", "B(2,2)", "b1^2", "B(1,5)"])
def test_parse_word_rejects(text):
    with pytest.raises(ParseError):
        parse_word(text, 4)


@given(band_words(4))
def test_format_then_parse(w):
    assert parse_word(format_word(w), 4) == w
