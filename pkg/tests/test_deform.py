import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from g2def.errors import WrongSpace
from g2def.field import SQRT5, fe
from g2def.forms import e, parse_form
from g2def.g2 import in_lambda3_27
from g2def.homogeneous import space_from_dict, space_to_dict
from g2def.deform import (
    combine_intertwiners,
    express_in_basis,
    fixture_intertwiners,
    fixture_values,
    kernel_ray_matches,
    main_lhs,
    main_lhs_indexed,
    main_lhs_wedge,
    main_system,
    solve_candidate,
    solve_deformations,
)
from g2def.linalg import rank
from g2def.reps import adjoint_module, intertwiner_space, is_equivariant

from strategies import field_elems


@pytest.fixture(scope="module")
def n11_su3(spaces, npds):
    sp, d = spaces["n11"], npds["n11"]
    U = adjoint_module(sp, 0)
    return sp, d, U, intertwiner_space(U, sp, d)


def test_squashed_fixture_table(spaces):
    sp = spaces["squashed-s7"]
    (A,) = fixture_intertwiners(sp, "sp(2)")
    assert A(sp.m_frame[4]) == parse_form("3*e467 + e137 + e126 + e234", 7, 3)
    # h-directions inside sp(2) map to zero
    assert A(sp.g.basis_vector(0)).is_zero()


def test_n11_fixture_values(spaces, npds):
    sp, d = spaces["n11"], npds["n11"]
    (A2,) = fixture_intertwiners(sp, "su(2)")
    assert A2(sp.g.basis_vector(8)) == (e(7, 1, 4, 5) + e(7, 1, 6, 7)) * -SQRT5
    A1 = fixture_intertwiners(sp, "su(3)")[0]
    assert A1(sp.g.basis_vector(3)) == d.sigma_o - e(7, 1, 2, 3) * 7


@pytest.mark.parametrize("name,label", [("squashed-s7", "sp(2)"), ("n11", "su(2)"), ("n11", "su(3)")])
def test_fixtures_are_intertwiners_in_solver_span(spaces, npds, name, label):
    sp, d = spaces[name], npds[name]
    fixtures = fixture_intertwiners(sp, label)
    basis = intertwiner_space(fixtures[0].module, sp, d)
    for A in fixtures:
        assert is_equivariant(A, sp)
        assert all(in_lambda3_27(col, d.frame) for col in A.columns)
        x = express_in_basis(A, basis)
        assert x is not None
        assert combine_intertwiners(x, basis).columns == A.columns


def test_fixture_numbers():
    v = fixture_values()
    assert v["squashed e1234"] == 36 / SQRT5
    assert v["n11 e2345"] == 22
    (ray,) = v["n11 su(3) kernel"]
    assert kernel_ray_matches(ray)
    assert not kernel_ray_matches([0, 0, 0, 0])


def test_wrong_space(spaces):
    with pytest.raises(WrongSpace):
        fixture_intertwiners(spaces["so5-so3"], "sp(2)")
    with pytest.raises(WrongSpace):
        fixture_intertwiners(spaces["n11"], "sp(2)")


def test_kernel_residual_is_zero(n11_su3):
    sp, d, U, basis = n11_su3
    hom, ker, kernel = solve_candidate(U, sp, d)
    assert (hom, ker) == (4, 1)
    for A in kernel:
        assert not A.is_zero()
        for u in U.basis:
            assert main_lhs(A, u, d.c, sp).is_zero()


def test_kernel_dimension_invariant_under_remixing(n11_su3):
    sp, d, U, basis = n11_su3
    rng = random.Random(7)
    r = len(basis)
    for _ in range(2):
        while True:
            M = [[fe(rng.randint(-3, 3)) + fe(rng.randint(-2, 2)) * SQRT5 for _ in range(r)] for _ in range(r)]
            if rank(M) == r:
                break
        mixed = [combine_intertwiners(row, basis) for row in M]
        ech = main_system(mixed, U, d.c, sp)
        assert r - ech.rank == 1


@settings(max_examples=15, deadline=None)
@given(st.lists(field_elems(max_terms=2), min_size=4, max_size=4), st.lists(field_elems(max_terms=1), min_size=8, max_size=8))
def test_indexed_equals_wedge(n11_su3, coeffs, ucoeffs):
    sp, d, U, basis = n11_su3
    A = combine_intertwiners(coeffs, basis)
    alpha = U.vector(ucoeffs)
    assert main_lhs_indexed(A, alpha, d.c, sp) == main_lhs_wedge(A, alpha, d.c, sp)


def _scaled(space, lam):
    dd = space_to_dict(space)
    dd["m_frame"] = [[str(fe(x) / lam) for x in v] for v in dd["m_frame"]]
    dd["c2"] = str(Fraction(dd["c2"]) * lam * lam)
    return space_from_dict(dd)


EXPECTED = {"so5-so3": (0, []), "squashed-s7": (0, []), "n11": (8, [("su(3)", 1)])}


def _summary(report):
    return [(c.label, c.hom_dim, c.kernel_dim) for c in report.candidates]


@pytest.mark.parametrize("name", list(EXPECTED))
def test_end_to_end_and_scaling(spaces, name):
    rep = solve_deformations(spaces[name])
    total, types = EXPECTED[name]
    assert rep.total_dimension == total
    assert [(t["module"], t["multiplicity"]) for t in rep.as_dict()["deformation_types"]] == types
    assert rep.einstein_equals_g2 is True
    assert rep.unresolved == []
    scaled = solve_deformations(_scaled(spaces[name], 2))
    assert _summary(scaled) == _summary(rep)
    assert scaled.total_dimension == total


def test_threaded_solve_matches(spaces, monkeypatch):
    serial = solve_deformations(spaces["n11"]).as_dict()
    monkeypatch.setenv("G2DEF_THREADS", "2")
    assert solve_deformations(spaces["n11"]).as_dict() == serial


def test_report_dict_keys(spaces):
    d = solve_deformations(spaces["squashed-s7"]).as_dict(decimal=True)
    for key in ("space", "tau0", "c", "candidates", "total_dimension", "einstein_equals_g2", "approximate"):
        assert key in d
    for c in d["candidates"]:
        assert {"weight", "casimir", "hom_dim", "kernel_dim", "dim_U"} <= set(c)
    assert d["tau0"] == "-12/5*r5"
