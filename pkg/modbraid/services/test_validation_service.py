import pytest

from modbraid.services.validation_service import ValidationService


@pytest.mark.parametrize("n,ok", [(1, True), (12, True), (0, False), (13, False), ("3", False), (True, False)])
def test_validate_degree(n, ok):
    valid, message = ValidationService.validate_degree(n)
    assert valid is ok
    assert (message == "") is ok


def test_validate_degree_custom_minimum():
    assert not ValidationService.validate_degree(1, minimum=2)[0]


def test_validate_scale():
    assert ValidationService.validate_scale(3)[0]
    assert not ValidationService.validate_scale(0)[0]
    assert not ValidationService.validate_scale(3, even=True)[0]
    assert ValidationService.validate_scale(4, even=True)[0]


def test_validate_modulus_and_limit():
    assert ValidationService.validate_modulus(0)[0]
    assert not ValidationService.validate_modulus(-4)[0]
    assert ValidationService.validate_limit(None)[0]
    assert not ValidationService.validate_limit(0)[0]


def test_validate_permutation():
    assert ValidationService.validate_permutation("[2,3,1]", 3)[0]
    assert ValidationService.validate_permutation("s(1,3)", 3)[0]
    assert not ValidationService.validate_permutation("", 3)[0]
    valid, message = ValidationService.validate_permutation("[1,1,2]", 3)
    assert not valid and message.startswith("Invalid permutation")


def test_validate_cell():
    assert ValidationService.validate_cell("e:1,2,3", 3)[0]
    assert not ValidationService.validate_cell("e:1,2,4", 3)[0]
    assert not ValidationService.validate_cell("f:1,2", 3)[0]
    assert not ValidationService.validate_cell("  ", 3)[0]


def test_validate_word_and_builtin():
    assert ValidationService.validate_word("b1 b2^-1 g(1,3)", 3)[0]
    assert not ValidationService.validate_word("b3", 3)[0]
    assert ValidationService.validate_builtin("pres11")[0]
    valid, message = ValidationService.validate_builtin("nope")
    assert not valid and "pres11" in message
