"""The text grammar: scalars, elements, expressions, omega tables, map files."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hvalgebra.bimaps import Inner, Omega, ROmega, SumBilinear, TabularBilinear
from hvalgebra.core import AlgebraKind, C1, C2, C3, Element, I, L, LIE_HV
from hvalgebra.errors import ParseError
from hvalgebra.leftsym import LeftSymParams, LeftSymProduct
from hvalgebra.linmaps import CentralMap, SumMap, TabularMap
from hvalgebra.parsing import (
    evaluate_expression,
    parse_basis_key,
    parse_bilinear_map_file,
    parse_element,
    parse_expression,
    parse_linear_map_file,
    parse_omega,
    parse_scalar,
)
from hvalgebra.scalars import Scalar

fractions = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=97
)


@given(fractions, fractions)
def test_scalar_round_trip(re, im):
    value = Scalar(re, im)
    assert parse_scalar(f"({value})") == value


@pytest.mark.parametrize(
    "text, value",
    [
        ("3", Scalar(3)),
        ("-3/2", Scalar(Fraction(-3, 2))),
        ("i", Scalar(0, 1)),
        ("-i", Scalar(0, -1)),
        ("2i", Scalar(0, 2)),
        ("(1-2i)", Scalar(1, -2)),
        ("(-1/2+1/2i)", Scalar(Fraction(-1, 2), Fraction(1, 2))),
        ("--2", Scalar(2)),
        ("(0)", Scalar(0)),
    ],
)
def test_scalar_forms(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["1/0", "3/", "(1+", "1-2i", "2 2", ""])
def test_scalar_rejects(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


keys = st.one_of(
    st.integers(-4, 4).map(L),
    st.integers(-4, 4).map(I),
    st.sampled_from([C1, C2]),
)
scalars = st.builds(Scalar, fractions, fractions).filter(bool)


@given(st.dictionaries(keys, scalars, min_size=1, max_size=4))
def test_element_round_trip(coeffs):
    element = Element(coeffs)
    assert parse_element(str(element)) == element


def test_element_forms():
    assert parse_element("4*L(0) + 1/2*C1") == Element(
        {L(0): 4, C1: Scalar(Fraction(1, 2))}
    )
    assert parse_element("-L(3) + 2i*I(-2)") == Element(
        {L(3): -1, I(-2): Scalar(0, 2)}
    )
    assert parse_element("(1+2i)*I(0)") == Element({I(0): Scalar(1, 2)})
    assert parse_element("L(1) - L(1)").is_zero()


def test_basis_key_forms():
    assert parse_basis_key("L(-3)") == L(-3)
    assert parse_basis_key("I(+2)") == I(2)
    assert parse_basis_key("C2") == C2
    with pytest.raises(ParseError, match="unknown basis symbol"):
        parse_basis_key("C4")
    with pytest.raises(ParseError, match="expected an index"):
        parse_basis_key("L(x)")
    with pytest.raises(ParseError, match="trailing"):
        parse_basis_key("L(1) L(2)")


def test_error_positions():
    with pytest.raises(ParseError) as err:
        parse_element("2*L(1) + $")
    assert err.value.position == 9
    with pytest.raises(ParseError, match="zero denominator"):
        parse_scalar("1/0")


def _eval(text, kind=AlgebraKind.HV, ls_product=None):
    return evaluate_expression(parse_expression(text), kind, ls_product)


def test_expression_evaluation():
    assert _eval("[L(2), L(-2)]") == Element({L(0): 4, C1: Scalar(Fraction(1, 2))})
    assert _eval("[L(2), L(-2)]", AlgebraKind.W00) == Element({L(0): 4})
    assert _eval("[L(1), [L(1), I(-2)]]") == Element({I(0): 2, C2: -4})
    assert _eval("3*[L(1), L(2)] - 2*L(3)") == Element({L(3): -5})
    assert _eval("2i*I(1) + [I(3), I(-3)]") == Element({I(1): Scalar(0, 2), C3: 3})


def test_dot_product_expressions():
    ls = LeftSymProduct(LeftSymParams(0, 0, Scalar(1, 1)))
    assert _eval("L(1) o L(1)", ls_product=ls) == Element(
        {L(2): Scalar(Fraction(-8, 13), Fraction(1, 13))}
    )
    # 'o' binds loosest: the right factor is the whole sum
    direct = ls.mul(Element.basis(L(1)), Element.basis(L(1)) + Element.basis(L(2)))
    assert _eval("L(1) o L(1) + L(2)", ls_product=ls) == direct
    # and associates to the left
    left = ls.mul(ls.mul(Element.basis(I(1)), Element.basis(L(-1))), Element.basis(L(0)))
    assert _eval("I(1) o L(-1) o L(0)", ls_product=ls) == left
    with pytest.raises(ValueError, match="left-symmetric"):
        _eval("L(1) o L(1)")


def test_omega_literals():
    om = parse_omega("{ -1: 2, 0: 1/3 }")
    assert om == Omega({-1: 2, 0: Fraction(1, 3)})
    assert parse_omega(str(om)) == om
    assert parse_omega("{}").is_zero()
    assert parse_omega("{ 2: (1+1i) }")[2] == Scalar(1, 1)
    with pytest.raises(ParseError, match="expected an integer offset"):
        parse_omega("{ L(1): 2 }")


def test_linear_map_file():
    text = """
    # table rows, then directives
    L(0) -> 2*L(0)
    I(1) -> 0
    @id 3
    @d3 (1+1i)
    @central L(0) -> C1 + 2*C2
    @inner L(1)
    """
    phi = parse_linear_map_file(text)
    assert isinstance(phi, SumMap)
    assert phi.covers(L(0)) and phi.covers(I(1)) and not phi.covers(L(2))
    # 2*L(0) + 3*L(0) + (1+i)*0 + [L(1), L(0)] + (C1 + 2*C2)
    assert phi(Element.basis(L(0))) == Element(
        {L(0): 5, L(1): 1, C1: 1, C2: 2}
    )
    # I(1): 0 + 3*I(1) + (1+i)*0 + [L(1), I(1)]
    assert phi(Element.basis(I(1))) == Element({I(1): 3, I(2): -1})


def test_linear_map_file_single_directive():
    phi = parse_linear_map_file("@central I(0) -> 2*C3")
    assert isinstance(phi, CentralMap)
    assert phi(Element.basis(I(0))) == Element({C3: 2})
    phi = parse_linear_map_file("")
    assert isinstance(phi, TabularMap)
    assert not phi.covers(L(0))


def test_linear_map_file_errors():
    with pytest.raises(ParseError, match="line 2"):
        parse_linear_map_file("L(0) -> L(0)\nL(1) ->")
    with pytest.raises(ParseError, match="unknown directive"):
        parse_linear_map_file("@spin 3")
    with pytest.raises(ParseError, match="line 1"):
        parse_linear_map_file("X -> L(0)")


def test_bilinear_map_file():
    text = """
    (L(1), L(2)) -> I(3)
    (L(2), L(1)) -> I(3)
    @inner 2
    @romega { 0: 1 }
    """
    f = parse_bilinear_map_file(text)
    assert isinstance(f, SumBilinear)
    # I(3) + 2*[L(1), L(2)] + I(3)
    assert f.eval_keys(LIE_HV, L(1), L(2)) == Element({I(3): 2, L(3): -2})
    assert f.covers(L(1), L(2)) and not f.covers(L(1), L(3))

    only = parse_bilinear_map_file("@romega { 1: 2 }")
    assert isinstance(only, ROmega)
    inner = parse_bilinear_map_file("@inner -1/2")
    assert isinstance(inner, Inner)
    table = parse_bilinear_map_file("(I(1), I(-1)) -> C3")
    assert isinstance(table, TabularBilinear)


def test_bilinear_map_file_errors():
    with pytest.raises(ParseError, match="empty bilinear map file"):
        parse_bilinear_map_file("# nothing here\n")
    with pytest.raises(ParseError, match="line 1"):
        parse_bilinear_map_file("L(1), L(2) -> I(3)")
