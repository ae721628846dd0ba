"""Graded words, elements, and the nilpotent odd parameter."""

import pytest

from qsg.core import EVEN, ODD, Element, Generator, GeneratorTable
from qsg.errors import TableMismatchError, ValidationError
from qsg.scalars import Q

T = GeneratorTable((
    Generator("x", EVEN, invertible=True),
    Generator("t", ODD),
    Generator("s", ODD),
))


def gen(name):
    return Element.generator(T, name)


def test_product_concatenates_words():
    xt = gen("x") * gen("t")
    assert xt.terms == {(0, (0, 1)): Q / Q}  # coefficient one
    assert (xt * gen("s")).terms == {(0, (0, 1, 2)): Q / Q}


def test_h_squares_to_zero():
    h = Element.h(T)
    assert (h * h).is_zero()
    assert (h * gen("t") * h).is_zero()


def test_h_is_graded_central():
    h = Element.h(T)
    # even letter: h passes freely
    assert gen("x") * h == h * gen("x")
    # odd letter: crossing costs a sign
    assert gen("t") * h == -(h * gen("t"))


def test_parity():
    assert gen("x").parity() == EVEN
    assert gen("t").parity() == ODD
    assert (gen("t") * gen("s")).parity() == EVEN
    assert Element.h(T).parity() == ODD
    assert (Element.h(T) * gen("t")).parity() == EVEN
    # mixed sums report no parity at all
    assert (gen("x") + gen("t")).parity() is None
    assert Element.zero(T).parity() is None


def test_addition_cancels():
    e = gen("x") * gen("t") - gen("x") * gen("t")
    assert e.is_zero()
    assert not e.terms


def test_scalar_and_integer_coefficients():
    e = 2 * gen("x") - gen("x")
    assert e == gen("x")
    assert (Q * gen("x")) / Q == gen("x")


def test_h_layer_split():
    h = Element.h(T)
    e = gen("x") + h * gen("t")
    assert e.drop_h() == gen("x")
    assert e.h_part() == gen("t")
    assert e.drop_h() + h * e.h_part() == e


def test_powers():
    assert gen("t") ** 2 == gen("t") * gen("t")
    assert (gen("x") ** 0) == Element.one(T)
    with pytest.raises(ValueError):
        gen("x") ** -1


def test_table_mismatch_is_refused():
    other = GeneratorTable((Generator("x", EVEN),))
    with pytest.raises(TableMismatchError):
        gen("x") + Element.generator(other, "x")


def test_reserved_and_invalid_tables():
    with pytest.raises(ValidationError):
        GeneratorTable((Generator("h", EVEN),))
    with pytest.raises(ValidationError):
        GeneratorTable((Generator("x", EVEN), Generator("x", ODD)))
    # odd generators never get inverses
    with pytest.raises(ValidationError):
        GeneratorTable((Generator("t", ODD, invertible=True),))


def test_with_inverse_inserts_after_base():
    table2, remap = T.with_inverse("x")
    assert table2.names() == ("x", "x_inv", "t", "s")
    assert table2.generator("x_inv").inverse_of == "x"
    assert remap == (0, 2, 3)
