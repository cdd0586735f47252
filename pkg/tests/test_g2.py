from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2def.errors import NotIn27, NotStable, NotTraceless, ZeroTau
from g2def.field import SQRT5, fe
from g2def.linalg import rank
from g2def.forms import KForm, Vector, contract, e, inner, wedge
from g2def.g2 import (
    G2_CASIMIR,
    SymTensor,
    bryant_i,
    bryant_j,
    casimir_g2,
    cross,
    identity_suite,
    in_lambda3_27,
    induces_metric,
    laplace_eigen_bookkeeping,
    p_action,
    projectors,
    schur_suite,
    standard_g2,
    standard_sigma,
    traceless_basis,
    two_form_action,
)

from strategies import forms, vectors

N = 7
FR = standard_g2()


def bv(i):
    return Vector.basis(N, i)


def test_standard_sigma_terms():
    s = standard_sigma()
    assert s.coeff((1, 2, 3)) == 1 and s.coeff((1, 6, 7)) == -1 and s.coeff((3, 5, 6)) == -1
    assert len(s.terms) == 7
    assert inner(s, s) == 7


def test_cross_product_values():
    # frozen from the sympy oracle
    assert cross(bv(1), bv(2)) == bv(3)
    assert cross(bv(1), bv(6)) == -bv(7)
    assert contract(bv(2), standard_sigma()) == -e(N, 1, 3) + e(N, 4, 6) + e(N, 5, 7)


def test_induces_metric_cases():
    s = standard_sigma()
    assert induces_metric(s, 1)
    assert not induces_metric(s, -1)
    assert not induces_metric(s * 2, 1)
    assert not induces_metric(e(N, 1, 2, 3), 1)


def test_not_stable():
    with pytest.raises(NotStable):
        projectors(e(N, 1, 2, 3))
    with pytest.raises(NotStable):
        projectors(KForm.zero(N, 3))


def test_projector_algebra():
    P = FR.projectors
    assert {k: v for k, v in P.ranks().items()} == {
        (2, 7): 7, (2, 14): 14, (3, 1): 1, (3, 7): 7, (3, 27): 27, (4, 1): 1, (4, 7): 7, (4, 27): 27, (5, 7): 7, (5, 14): 14
    }
    for deg, parts in ((2, (7, 14)), (3, (1, 7, 27))):
        mats = [P.matrices[(deg, r)] for r in parts]
        for a, A in enumerate(mats):
            assert A @ A == A
            for b, B in enumerate(mats):
                if a != b:
                    assert rank(A @ B) == 0


def test_casimir_eigenvalues_frozen():
    assert G2_CASIMIR == {(0, 0): 0, (1, 0): -4, (0, 1): -8, (2, 0): Fraction(-28, 3), (1, 1): -14, (3, 0): -16}
    s = standard_sigma()
    assert casimir_g2(s).is_zero()
    assert casimir_g2(contract(bv(1), s)) == contract(bv(1), s) * -4


def test_bryant_round_trip_and_errors():
    for h in traceless_basis()[:6]:
        g = bryant_i(h)
        assert in_lambda3_27(g)
        assert bryant_j(g) == h * -8
    with pytest.raises(NotTraceless):
        bryant_i(SymTensor.metric())
    with pytest.raises(NotIn27):
        bryant_j(standard_sigma())
    # i on the metric recovers 6 sigma (unchecked)
    assert bryant_i(SymTensor.metric(), check=False) == standard_sigma() * 6


def test_bryant_symmetric_product_convention():
    h = SymTensor.sym(1, 2)
    assert h.h[0][1] == Fraction(1, 2) and h.h[1][0] == Fraction(1, 2)
    assert bryant_i(h) == wedge(e(N, 1), contract(bv(2), standard_sigma())) + wedge(
        e(N, 2), contract(bv(1), standard_sigma())
    )


def test_laplace_bookkeeping():
    tau0 = -2 * SQRT5 * Fraction(3, 5)
    bk = laplace_eigen_bookkeeping(tau0)
    assert bk.roots == (-tau0, tau0 / 2)
    assert bk.c == tau0 * Fraction(5, 6)
    assert bk.casimir_targets == (fe(-1), fe(Fraction(-2, 5)), fe(Fraction(-3, 5)))
    with pytest.raises(ZeroTau):
        laplace_eigen_bookkeeping(0)


def test_suites_pass():
    assert identity_suite(samples=20, seed=3).passed
    rep = schur_suite()
    assert rep.passed, [c for c in rep.checks if not c.passed]


@settings(max_examples=60, deadline=None)
@given(vectors(), vectors(), st.data())
def test_g2_action_fixes_sigma_and_commutes_with_projectors(X, Y, data):
    w = data.draw(forms(2, max_terms=3))
    s = standard_sigma()
    # P_X lies in Lambda^2_7: it moves sigma into Lambda^3_7, while Lambda^2_14 fixes sigma
    assert FR.projectors.in_component(p_action(X, s), 7)
    assert two_form_action(FR.projectors.project(w, 14), s).is_zero()
    # cross product: X x Y = -Y x X, and <X x Y, X> = 0
    Z = cross(X, Y)
    assert Z == -cross(Y, X)
    assert Z.dot(X) == 0
    P = FR.projectors
    a = P.project(w, 14)
    gamma = wedge(e(N, 1), w) + e(N, 2, 5, 7)
    for r in (1, 7, 27):
        assert P.project(two_form_action(a, gamma), r) == two_form_action(a, P.project(gamma, r))


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_projectors_decompose(data):
    w = data.draw(forms(3, max_terms=5))
    P = FR.projectors
    parts = [P.project(w, r) for r in (1, 7, 27)]
    assert parts[0] + parts[1] + parts[2] == w
    assert in_lambda3_27(parts[2])
