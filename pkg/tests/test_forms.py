import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2def.errors import DimensionMismatch, ParseError
from g2def.field import SQRT5, fe
from g2def.forms import (
    KForm,
    Vector,
    contract,
    e,
    format_form,
    hodge,
    inner,
    parse_form,
    sort_sign,
    volume,
    wedge,
)

from strategies import forms, vectors

N = 7


def test_sort_sign():
    assert sort_sign((2, 1)) == (-1, (1, 2))
    assert sort_sign((1, 3, 2, 4)) == (-1, (1, 2, 3, 4))
    assert sort_sign((1, 1))[0] == 0


def test_wedge_examples():
    w = wedge(e(N, 1, 2, 3) + e(N, 1, 4, 5), e(N, 6, 7))
    assert w == e(N, 1, 2, 3, 6, 7) + e(N, 1, 4, 5, 6, 7)
    assert wedge(e(N, 1), e(N, 1)).is_zero()
    assert wedge(e(N, 2), e(N, 1)) == -e(N, 1, 2)


def test_contract_examples():
    e1 = Vector.basis(N, 1)
    assert contract(e1, e(N, 1, 2, 3)) == e(N, 2, 3)
    assert contract(Vector.basis(N, 2), e(N, 1, 2, 3)) == -e(N, 1, 3)
    # determinant convention: e^{12}(e1, e2) = 1
    assert contract(Vector.basis(N, 2), contract(e1, e(N, 1, 2))).coeff(()) == 1


def test_hodge_examples():
    assert hodge(e(N, 1, 2, 3)) == e(N, 4, 5, 6, 7)
    assert hodge(e(N, 1, 2, 3), -1) == -e(N, 4, 5, 6, 7)
    assert wedge(e(N, 1, 2, 3), hodge(e(N, 1, 2, 3))) == volume(N)


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        contract(Vector.basis(N, 1), KForm.zero(N, 0))
    with pytest.raises(DimensionMismatch):
        e(N, 1) + e(N, 1, 2)
    with pytest.raises(ValueError):
        e(N, 8)


def test_parse_round_trip():
    w = e(N, 1, 2, 3) * fe("-12/5*r5") + e(N, 2, 4, 6) * (1 + SQRT5)
    assert parse_form(format_form(w), N, 3) == w
    assert parse_form("e123 + e145", N, 3) == e(N, 1, 2, 3) + e(N, 1, 4, 5)
    assert parse_form("0", N, 3).is_zero()
    for bad in ["e12", "e1234x", "2*e188"]:
        with pytest.raises(ParseError):
            parse_form(bad, N, 3)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_antiderivation(k, l, data):
    a = data.draw(forms(k))
    b = data.draw(forms(l))
    X = data.draw(vectors())
    lhs = contract(X, wedge(a, b))
    rhs = wedge(contract(X, a), b) + wedge(a, contract(X, b)) * (-1) ** k
    assert lhs == rhs
    assert wedge(a, b) == wedge(b, a) * (-1) ** (k * l)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 7), st.sampled_from([1, -1]), st.data())
def test_hodge_involution_and_inner(k, orientation, data):
    a = data.draw(forms(k))
    b = data.draw(forms(k))
    # on a Riemannian 7-manifold ** = id
    assert hodge(hodge(a, orientation), orientation) == a
    assert wedge(a, hodge(b, orientation)) == volume(N, orientation) * inner(a, b)


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 4), st.data())
def test_euler_identity_and_double_contraction(k, data):
    w = data.draw(forms(k))
    X = data.draw(vectors())
    acc = KForm.zero(N, k)
    for i in range(1, N + 1):
        acc = acc + wedge(e(N, i), contract(Vector.basis(N, i), w))
    assert acc == w * k
    assert contract(X, contract(X, w)).is_zero()
