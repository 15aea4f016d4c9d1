import pytest

from modbraid.errors import ParseError, SearchSpaceTooLarge
from modbraid.services.calculation_service import CalculationService


def test_compute_phi():
    result = CalculationService.compute_phi("e:1,2,3", 3)
    assert result == {"cell": "e:1,2,3", "n": 3, "value": {"1,3": 1, "2,3": -1}}


def test_compute_kappa_and_section_agree():
    kappa = CalculationService.compute_kappa("d:1,3,2,4", 4)
    section = CalculationService.compute_section_cocycle("d:1,3,2,4", 4, ring="z2")
    assert kappa["value"] == section["value"] == {"1,2": 1, "1,4": 1, "2,3": 1, "3,4": 1}
    assert section["ring"] == "Z2"


def test_compute_cocycle():
    result = CalculationService.compute_cocycle("s(1,2)", "s(1,2)", 3)
    assert result["value"] == {"1,2": 1}
    scaled = CalculationService.compute_cocycle("s(1,2)", "s(1,2)", 3, t=3)
    assert scaled["value"] == {"1,2": 3}
    assert scaled["ring"] == "Z(t=3)"


def test_compute_burau():
    result = CalculationService.compute_burau("b1 b1 b1 b1", 2, 4)
    assert result["identity"]
    assert result["rows"] == [[1, 0], [0, 1]]
    assert not CalculationService.compute_burau("b1 b1 b1 b1", 2, 8)["identity"]


def test_compute_element():
    result = CalculationService.compute_element("g(1,2)", 3)
    assert result["vec"] == {"1,2": 1}
    assert CalculationService.compute_element("B(1,3) B(1,3) B(1,3) B(1,3)", 3, "z2")["vec"] == {}


def test_compute_rejects_bad_text():
    with pytest.raises(ParseError):
        CalculationService.compute_phi("q:1,2", 3)


def test_enumerate_and_bound():
    assert CalculationService.enumerate_zn(3) == {"n": 3, "order": 48, "expected": 48, "pass": True}
    with pytest.raises(SearchSpaceTooLarge):
        CalculationService.enumerate_zn(6)
    assert CalculationService.schreier(3) == {"n": 3, "index": 48, "bound": 49}


def test_coset_enumeration_builtin_and_file(tmp_path):
    result = CalculationService.coset_enumeration(builtin="pres11", n=3)
    assert result["order"] == 48 and result["status"] == "complete"
    assert result["presentation"] == "pres11" and result["n"] == 3

    path = tmp_path / "dihedral.pres"
    path.write_text("gens: r, f;\nrels: r^5, f^2, (r f)^2;\n", encoding="utf-8")
    result = CalculationService.coset_enumeration(path=str(path))
    assert result["order"] == 10
    assert result["presentation"] == "dihedral"
    assert "n" not in result


def test_coset_enumeration_abort():
    result = CalculationService.coset_enumeration(builtin="pres11", n=3, limit=5)
    assert result["status"] == "aborted"
    assert result["order"] is None
