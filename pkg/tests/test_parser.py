"""Expression grammar, symbol resolution, and print/parse round-trips."""

import pytest

from qsg.errors import ParseError
from qsg.parser import parse
from qsg.presentations import presentation, resolver_for
from qsg.printer import element_str

GLH = presentation("glh")
R = resolver_for(GLH)


def test_sums_products_powers():
    assert parse("a*beta - beta*a", R) == (
        parse("a", R) * parse("beta", R) - parse("beta", R) * parse("a", R))
    assert parse("beta^2", R) == parse("beta", R) * parse("beta", R)
    assert parse("2*a - a - a", R).is_zero()


def test_juxtaposition_is_product():
    assert parse("2 a beta", R) == parse("2*a*beta", R)


def test_h_power_vanishes():
    assert parse("h^2 * a", R).is_zero()
    assert not parse("h * a", R).is_zero()


def test_scalar_division():
    assert parse("(q - 1)/(q - 1) * a", R) == parse("a", R)
    assert parse("a / 2 * 2", R) == parse("a", R)
    # dividing by a genuinely noncommutative element is refused
    with pytest.raises(ParseError):
        parse("a / beta", R)


def test_unary_minus_and_parens():
    assert parse("-(a - d)", R) == parse("d - a", R)
    assert parse("-a + a", R).is_zero()


def test_lex_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse("gamma@a", R)
    assert err.value.position == 6


def test_unknown_symbol_suggests():
    with pytest.raises(ParseError) as err:
        parse("bta*a", R)
    assert "beta" in str(err.value)


def test_dangling_operator():
    with pytest.raises(ParseError):
        parse("a *", R)
    with pytest.raises(ParseError):
        parse("(a", R)
    with pytest.raises(ParseError):
        parse("a ^ beta", R)


def test_composites_resolve():
    # composites come back already in normal form over their presentation
    d_h = parse("D_h", R)
    assert d_h == GLH.normalize(parse("a*d_inv - beta*d_inv*gamma*d_inv", R))


def test_print_parse_round_trip():
    samples = (
        "a", "-a", "2*a*beta", "h*beta*d", "a - d + h*gamma",
        "(q - 1)/q*a", "a*a_inv", "beta*gamma*d",
    )
    for text in samples:
        elem = parse(text, R)
        printed = element_str(elem)
        assert parse(printed, R) == elem
        # printing is canonical: a second round trip is byte-stable
        assert element_str(parse(printed, R)) == printed
