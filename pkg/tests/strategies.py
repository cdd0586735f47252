"""Hypothesis strategies for field elements, vectors and forms."""

from fractions import Fraction

from hypothesis import strategies as st

from g2def.field import BASIS_ORDER, FieldElem
from g2def.forms import KForm, Vector, basis_indices

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


@st.composite
def field_elems(draw, max_terms=3):
    masks = draw(st.lists(st.sampled_from(BASIS_ORDER), max_size=max_terms, unique=True))
    coeffs = {m: draw(small_rationals) for m in masks}
    return sum((FieldElem.monomial(m, Fraction(c)) for m, c in coeffs.items()), FieldElem(0))


nonzero_field_elems = field_elems().filter(bool)


@st.composite
def vectors(draw, n=7):
    return Vector([draw(field_elems(max_terms=2)) for _ in range(n)])


@st.composite
def forms(draw, k, n=7, max_terms=4):
    idx = draw(st.lists(st.sampled_from(basis_indices(n, k)), max_size=max_terms, unique=True))
    return KForm(n, k, {I: draw(field_elems(max_terms=2)) for I in idx})
