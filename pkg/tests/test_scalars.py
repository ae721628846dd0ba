"""Exact rational-function coefficients."""

from fractions import Fraction

import pytest

from qsg.scalars import ONE, Q, ZERO, Scalar


def test_integer_construction():
    assert Scalar(3) - Scalar(2) == ONE
    assert Scalar(0) == ZERO
    assert not ZERO
    assert ONE


def test_field_arithmetic():
    x = (Q - 1) / (Q + 1)
    y = (Q + 1) / (Q - 1)
    assert x * y == ONE
    assert x + (-x) == ZERO
    assert ONE / y == x


def test_cancellation_is_automatic():
    # (q^2 - 1)/(q - 1) and q + 1 must be the same object value
    assert (Q * Q - 1) / (Q - 1) == Q + 1
    assert hash((Q * Q - 1) / (Q - 1)) == hash(Q + 1)


def test_normal_form_signs():
    # denominators keep a positive leading coefficient
    a = ONE / (1 - Q)
    b = -(ONE / (Q - 1))
    assert a == b
    assert str(a) == str(b)


def test_subs_q():
    s = (Q * Q - 1) / (Q + 2)
    assert s.subs_q(Fraction(2)) == Fraction(3, 4)
    assert (Q - 1).subs_q(Fraction(1)) == 0


def test_subs_q_at_pole():
    s = ONE / (Q - 1)
    with pytest.raises(ZeroDivisionError):
        s.subs_q(Fraction(1))


def test_depends_on_q():
    assert Q.depends_on_q()
    assert not (Q - Q).depends_on_q()
    assert not Scalar(7).depends_on_q()
    assert ((Q + 1) / (Q + 1)).depends_on_q() is False


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_printing_round_trips_simple_forms():
    assert str(Q) == "q"
    assert str(-Q) == "-q"
    assert str(ONE / Q) == "1/q"
    assert str((Q - 1) / Q) == "(q - 1)/q"
