import pytest
from hypothesis import given, settings, strategies as st

from modbraid.algebra.braid_words import BraidLetter, commutator, concat, word
from modbraid.algebra.burau_level import (
    SquareMatrixModM, burau_generator, burau_matrix, in_level, level_of_generators,
)
from modbraid.algebra.ext_groups import normal_generators_b4
from modbraid.algebra.perm_core import all_pairs


def b(i, e=1):
    return BraidLetter.b(i, e)


def artin_words(n, max_size=10):
    letters = st.builds(BraidLetter.b, st.integers(1, n - 1), st.sampled_from([1, -1]))
    return st.lists(letters, max_size=max_size).map(lambda ls: word(n, ls))


def test_generator_block_at_minus_one():
    assert burau_matrix(word(2, [b(1)])).entries == ((2, -1), (1, 0))
    assert burau_matrix(word(2, [b(1, -1)])).entries == ((0, 1), (-1, 2))


def test_empty_word_is_identity():
    assert burau_matrix(word(4), 0).is_identity()
    assert burau_matrix(word(4), 5).is_identity()


def test_fourth_power_mod_four():
    assert burau_matrix(word(2, [b(1)] * 4), 4).is_identity()
    assert in_level(word(2, [b(1)] * 4), 4)
    assert not in_level(word(2, [b(1)]), 4)
    assert not in_level(word(2, [b(1)] * 4), 8)


def test_commutator_of_squares_in_level_four():
    w = commutator(word(3, [b(1), b(1)]), word(3, [b(2), b(2)]))
    assert in_level(w, 4)


def test_modulus_one_is_trivial():
    assert burau_matrix(word(3, [b(1), b(2)]), 1).is_identity()


@settings(max_examples=50)
@given(artin_words(5), artin_words(5), st.sampled_from([0, 2, 4, 7]))
def test_burau_is_a_homomorphism(u, v, m):
    assert burau_matrix(concat(u, v), m) == burau_matrix(u, m) @ burau_matrix(v, m)


@pytest.mark.parametrize("n", [3, 5, 8])
@pytest.mark.parametrize("m", [0, 2, 4])
def test_braid_relations_hold(n, m):
    for i in range(1, n - 1):
        x, y = burau_generator(i, n, m), burau_generator(i + 1, n, m)
        assert x @ y @ x == y @ x @ y
    for i in range(1, n):
        for j in range(i + 2, n):
            x, y = burau_generator(i, n, m), burau_generator(j, n, m)
            assert x @ y == y @ x


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_normal_generators_in_level_four(n):
    assert all(level_of_generators(normal_generators_b4(n), 4))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_pure_generators_in_level_two(n):
    squares = [word(n, [BraidLetter.band(a.lo, a.hi)] * 2) for a in all_pairs(n)]
    assert all(level_of_generators(squares, 2))


def test_matrix_json_is_row_major():
    matrix = burau_generator(1, 2, 4)
    assert matrix.to_json() == {"n": 2, "m": 4, "rows": [[2, 3], [1, 0]]}


def test_entries_reduced_on_construction():
    assert SquareMatrixModM(2, 3, ((4, -1), (0, 3))).entries == ((1, 2), (0, 0))
