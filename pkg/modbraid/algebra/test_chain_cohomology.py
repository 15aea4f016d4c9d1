import pytest

from modbraid.algebra.chain_cohomology import (
    BarLabel, Cell2, FreeModElem, GroupRingElem, OneCell, ZeroCell, all_cells, augmentation,
    boundary_P, boundary_R, boundary_R1, boundary_R2, check_chain_map, check_complexes,
    closed_form_check, coboundary_shift_check, cocycle_via_section, eta, format_cell, gamma,
    kappa, parse_cell, phi,
)
from modbraid.algebra.ext_groups import GN, ZN
from modbraid.algebra.perm_core import UPair, identity, transposition
from modbraid.algebra.strand_diagram import Z2, PairVector
from modbraid.errors import ParseError


def e(n, i, j, ring="Z"):
    return PairVector.basis(n, i, j, ring)


def test_cell_validation():
    assert Cell2.e(3, 1, 2).degree == 3
    for bad in [lambda: Cell2.c(2, 1), lambda: Cell2.d(1, 2, 2, 3), lambda: Cell2.e(1, 1, 2),
                lambda: Cell2("f", (1, 2))]:
        with pytest.raises(ValueError):
            bad()


def test_parse_and_format_cell():
    assert parse_cell("e:1,2,3") == Cell2.e(1, 2, 3)
    assert parse_cell(" D: 1, 3, 2, 4 ") == Cell2.d(1, 3, 2, 4)
    assert format_cell(Cell2.c(1, 4)) == "c:1,4"
    for text in ["c:2,1", "x:1,2", "c 1 2", "d:1,2,2,3"]:
        with pytest.raises(ParseError):
            parse_cell(text)


def test_cell_counts():
    cells = all_cells(4)
    assert sum(1 for c in cells if c.kind == "c") == 6
    assert sum(1 for c in cells if c.kind == "d") == 6
    assert sum(1 for c in cells if c.kind == "e") == 24
    assert [c.kind for c in all_cells(2)] == ["c"]


def test_group_ring_arithmetic():
    s = transposition(3, 1, 2)
    x = GroupRingElem.of(s) + GroupRingElem.one(3)
    assert (x * x).terms == ((identity(3), 2), (s, 2))
    assert (x - x).is_zero()
    assert x.scale(3).augmentation() == 6


def test_phi_examples():
    assert phi(Cell2.e(1, 2, 3), 3).to_json() == {"1,3": 1, "2,3": -1}
    assert phi(Cell2.e(2, 1, 3), 3).is_zero()
    assert phi(Cell2.c(2, 3), 4) == e(4, 2, 3)
    assert phi(Cell2.d(1, 3, 2, 4), 4) == e(4, 1, 2) - e(4, 1, 4) - e(4, 2, 3) + e(4, 3, 4)
    assert phi(Cell2.d(1, 2, 3, 4), 4).is_zero()


def test_kappa_is_reduction_of_phi_on_examples():
    for cell in all_cells(4):
        assert kappa(cell, 4) == eta(phi(cell, 4)), format_cell(cell)
    assert kappa(Cell2.e(1, 2, 3), 3).ring == Z2


def test_cocycles_need_a_large_enough_degree():
    cell = Cell2.e(1, 2, 4)
    assert kappa(cell, 5).n == 5
    for f in (phi, kappa, cocycle_via_section):
        with pytest.raises(ValueError):
            f(cell, 3)


def test_boundary_of_c_cell():
    n = 3
    chain = boundary_R2(Cell2.c(1, 2), n)
    assert chain.coefficient(OneCell(UPair(1, 2))) == GroupRingElem.one(n) + GroupRingElem.of(transposition(n, 1, 2))


def test_boundary_of_one_cell_has_zero_augmentation():
    x = boundary_R1(OneCell(UPair(1, 3)), 3)
    assert augmentation(x) == 0
    assert x.coefficient(ZeroCell()) == GroupRingElem.of(transposition(3, 1, 3)) - GroupRingElem.one(3)


def test_bar_boundary_on_square_of_transposition():
    n = 2
    s = transposition(n, 1, 2)
    chain = boundary_P(FreeModElem.basis(n, BarLabel((s, s))), 2)
    # [s|s] ↦ s[s] − [1] + [s], and [1] = 0
    assert chain.coefficient(BarLabel((s,))) == GroupRingElem.of(s) + GroupRingElem.one(n)


def test_boundary_dimension_errors():
    x = FreeModElem.basis(3, ZeroCell())
    with pytest.raises(ValueError):
        boundary_R(x, 0)
    with pytest.raises(ValueError):
        boundary_P(x, 3)
    with pytest.raises(ValueError):
        boundary_R2(Cell2.c(1, 4), 3)


def test_gamma_on_generators():
    n = 3
    s12 = transposition(n, 1, 2)
    assert gamma(Cell2.c(1, 2), n) == FreeModElem.basis(n, BarLabel((s12, s12)))
    assert gamma(OneCell(UPair(1, 2)), n) == FreeModElem.basis(n, BarLabel((s12,)))
    with pytest.raises(ValueError):
        gamma(Cell2.c(1, 2))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_chain_map_commutes_with_boundaries(n):
    report = check_chain_map(n)
    failed = [row["cell"] for row in report["rows"] if not row["pass"]]
    assert not failed


@pytest.mark.parametrize("n", [2, 3])
def test_complexes_square_to_zero(n):
    assert check_complexes(n)["pass"]


@pytest.mark.slow
def test_chain_map_five_strands():
    assert all(row["pass"] for row in check_chain_map(5)["rows"])


@pytest.mark.slow
def test_complexes_square_to_zero_four_strands():
    assert check_complexes(4)["pass"]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_closed_forms_match_section_cocycle(n):
    failed = [row["cell"] for row in closed_form_check(n)["rows"] if not row["pass"]]
    assert not failed


@pytest.mark.slow
def test_closed_forms_six_strands():
    assert all(row["pass"] for row in closed_form_check(6)["rows"])


def test_cocycle_via_section_examples():
    assert cocycle_via_section(Cell2.c(1, 2), 2, GN) == e(2, 1, 2)
    assert cocycle_via_section(Cell2.c(1, 2), 2, ZN) == e(2, 1, 2, Z2)
    assert cocycle_via_section(Cell2.d(1, 3, 2, 4), 4, GN) == phi(Cell2.d(1, 3, 2, 4), 4)


@pytest.mark.parametrize("seed", [0, 1, 7])
@pytest.mark.parametrize("n", [3, 4])
def test_coboundary_shift(n, seed):
    report = coboundary_shift_check(n, seed=seed)
    assert report["seed"] == seed
    failed = [row["cell"] for row in report["rows"] if not row["pass"]]
    assert not failed


def test_coboundary_shift_is_reproducible():
    first = coboundary_shift_check(3, seed=11)
    second = coboundary_shift_check(3, seed=11)
    assert first == second
