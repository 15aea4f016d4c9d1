import pytest

from modbraid.algebra.relation_tables import (
    TABLE1, TABLE2, TABLE3, Sym, format_symbols, g, invert_symbols, s, table_relations,
)


def rows_named(table, n, name, t=1):
    return [row for row in table_relations(table, n, t) if row.row == name]


def find(rows, indices):
    matches = [row for row in rows if row.indices == indices]
    assert len(matches) == 1
    return matches[0]


def test_letter_validation():
    with pytest.raises(ValueError):
        Sym("x", s(1, 2).pair)
    with pytest.raises(ValueError):
        s(1, 2, 2)
    assert g(1, 2, 3).inverse() == g(1, 2, -3)


def test_symbol_words():
    w = (s(1, 2), g(1, 3, 2))
    assert invert_symbols(w) == (g(1, 3, -2), s(1, 2, -1))
    assert format_symbols(w) == "s(1,2) g(1,3)^2"
    assert format_symbols(()) == "1"


def test_row_families_table1():
    names = {row.row for row in table_relations(TABLE1, 4)}
    assert names == {"R1", "R2", "R3", "R4", "R5", "R6"}
    assert len(rows_named(TABLE1, 4, "R2")) == 6
    assert len(rows_named(TABLE1, 4, "R6")) == 36


def test_table3_has_kernel_squares():
    rows = rows_named(TABLE3, 3, "r0")
    assert len(rows) == 3
    assert rows[0].lhs == (g(1, 2), g(1, 2)) and rows[0].rhs == ()


def test_r5_commutator_values():
    row = find(rows_named(TABLE1, 4, "R5"), (1, 3, 2, 4))
    assert row.rhs == (g(1, 2), g(1, 4, -1), g(2, 3, -1), g(3, 4))
    row = find(rows_named(TABLE3, 4, "r5"), (1, 3, 2, 4))
    assert row.rhs == (g(1, 2), g(1, 4), g(2, 3), g(3, 4))
    row = find(rows_named(TABLE1, 4, "R5"), (1, 2, 3, 4))
    assert row.rhs == ()


def test_r2_scales_with_t():
    row = find(rows_named(TABLE2, 3, "Rt2", t=2), (1, 2))
    assert row.lhs == (s(1, 2), s(1, 2))
    assert row.rhs == (g(1, 2, 2),)
    row = find(rows_named(TABLE2, 4, "Rt5", t=3), (1, 3, 2, 4))
    assert row.rhs == (g(1, 2, 3), g(1, 4, -3), g(2, 3, -3), g(3, 4, 3))


def test_table1_ignores_t():
    assert table_relations(TABLE1, 3, 5) == table_relations(TABLE1, 3, 1)


def test_r6_general_and_literal_forms():
    row = find(rows_named(TABLE1, 3, "R6"), (1, 2, 2, 3))
    assert row.rhs == (g(1, 3),)
    assert row.literal_rhs is None

    row = find(rows_named(TABLE3, 3, "r6"), (1, 2, 1, 2))
    assert row.rhs == (g(1, 2),)
    assert not row.literal_defined


def test_relator_is_lhs_times_inverse_rhs():
    row = find(rows_named(TABLE1, 3, "R2"), (1, 2))
    assert row.relator == (s(1, 2), s(1, 2), g(1, 2, -1))


def test_unknown_table_and_scale():
    with pytest.raises(ValueError):
        table_relations("table9", 3)
    with pytest.raises(ValueError):
        table_relations(TABLE2, 3, 0)
