import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2def.errors import DimensionMismatch, DivisionByZero
from g2def.field import I, SQRT5, ZERO, fe
from g2def.linalg import FieldMatrix, SpanCoordinates, inverse, nullspace, rank, solve

from strategies import field_elems


def _apply(M, x):
    return FieldMatrix(M) @ x


def test_nullspace_examples():
    assert nullspace(FieldMatrix.identity(3)) == []
    assert len(nullspace(FieldMatrix.zeros(2, 3))) == 3
    (v,) = nullspace([[1, SQRT5]])
    assert v[0] == -SQRT5 * v[1] and v[1] != 0
    assert _apply([[1, SQRT5]], v) == (ZERO,)


def test_rank_examples():
    assert rank(FieldMatrix.identity(4)) == 4
    assert rank(FieldMatrix.zeros(3, 5)) == 0
    assert rank([[1, I], [I, -1]]) == 1


def test_degenerate_shapes():
    M = FieldMatrix([], 4)
    assert M.shape == (0, 4)
    assert len(nullspace(M)) == 4
    assert nullspace(FieldMatrix([[], []], 0)) == []


def test_solve_and_inverse():
    M = FieldMatrix([[1, 2], [SQRT5, I]])
    x = solve(M, [3, 4])
    assert M @ x == (fe(3), fe(4))
    assert inverse(M) @ M == FieldMatrix.identity(2)
    assert solve([[1, 1], [2, 2]], [1, 3]) is None
    with pytest.raises(DivisionByZero):
        inverse([[1, 1], [2, 2]])
    with pytest.raises(DimensionMismatch):
        FieldMatrix([[1]]) @ FieldMatrix([[1, 2], [3, 4], [5, 6]]).T.T.T


def test_span_coordinates():
    sc = SpanCoordinates([(1, 0, SQRT5), (0, 1, I)])
    assert sc.coords((2, 3, 2 * SQRT5 + 3 * I)) == (fe(2), fe(3))
    assert not sc.contains((0, 0, 1))
    with pytest.raises(ValueError):
        SpanCoordinates([(1, 2), (2, 4)])


@st.composite
def matrices(draw):
    r = draw(st.integers(0, 4))
    c = draw(st.integers(1, 5))
    rows = [[draw(field_elems(max_terms=2)) for _ in range(c)] for _ in range(r)]
    # make some rows dependent
    if r >= 2 and draw(st.booleans()):
        k = draw(field_elems(max_terms=1))
        rows[-1] = [k * x for x in rows[0]]
    return FieldMatrix(rows, c)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(M):
    ns = nullspace(M)
    assert rank(M) + len(ns) == M.cols
    for v in ns:
        assert all(not x for x in M @ v)
