"""Matrix models of the built-in spaces.

Only used to (re)generate the shipped space files: each model lists a basis
of g as block-diagonal complex matrices over K, expresses h and the frame of m
in that basis, and reads off structure constants. Run
``python -m g2def.models`` to rewrite ``g2def/data``.
"""

from __future__ import annotations

from pathlib import Path

from gmpy2 import mpq

from .field import I, ONE, SQRT2, SQRT5, ZERO, fe, sqrt_rational
from .homogeneous import GroupFactor, LieAlgebra, ReductiveSpace, dumps_space, nearly_parallel_data
from .linalg import SpanCoordinates, solve


def zeros(n):
    return [[ZERO] * n for _ in range(n)]


def mm(A, B):
    n = len(A)
    out = zeros(n)
    for i in range(n):
        for k in range(n):
            a = A[i][k]
            if not a:
                continue
            for j in range(n):
                if B[k][j]:
                    out[i][j] = out[i][j] + a * B[k][j]
    return out


def madd(*Ms, coeffs=None):
    n = len(Ms[0])
    coeffs = coeffs or [ONE] * len(Ms)
    out = zeros(n)
    for c, M in zip(coeffs, Ms):
        c = fe(c)
        for i in range(n):
            for j in range(n):
                if M[i][j]:
                    out[i][j] = out[i][j] + c * M[i][j]
    return out


def scale(c, M):
    return madd(M, coeffs=[c])


def commutator(A, B):
    return madd(mm(A, B), mm(B, A), coeffs=[1, -1])


def block_diag(*blocks):
    n = sum(len(b) for b in blocks)
    out = zeros(n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = fe(x)
        off += len(b)
    return out


def flatten(M):
    return tuple(x for row in M for x in row)


def unit(n, i, j, c=1):
    M = zeros(n)
    M[i][j] = fe(c)
    return M


# --- quaternions as complex 2x2 matrices ---------------------------------------------

Q1 = [[ONE, ZERO], [ZERO, ONE]]
QI = [[I, ZERO], [ZERO, -I]]
QJ = [[ZERO, -ONE], [ONE, ZERO]]
QK = mm(QI, QJ)
QUATERNION_UNITS = (Q1, QI, QJ, QK)


def quaternion_matrix(Q):
    """A quaternionic matrix (entries: 2x2 complex blocks) as a complex matrix."""
    n = len(Q)
    out = zeros(2 * n)
    for a in range(n):
        for b in range(n):
            blk = Q[a][b]
            if blk is None:
                continue
            for i in range(2):
                for j in range(2):
                    out[2 * a + i][2 * b + j] = blk[i][j]
    return out


def qneg(q):
    return scale(-1, q)


def qconj(q):
    """Quaternionic conjugate = conjugate transpose of the 2x2 block."""
    return [[q[j][i].conjugate() for j in range(2)] for i in range(2)]


class MatrixModel:
    """Real Lie algebra spanned by given complex matrices, closed under commutators."""

    def __init__(self, basis):
        self.basis = basis
        self.coords = SpanCoordinates([flatten(M) for M in basis])

    def to_coords(self, M):
        return self.coords.coords(flatten(M))

    def algebra(self):
        n = len(self.basis)
        brackets = {}
        for i in range(n):
            for j in range(i + 1, n):
                c = self.to_coords(commutator(self.basis[i], self.basis[j]))
                row = {k: v for k, v in enumerate(c) if v}
                if row:
                    brackets[(i, j)] = row
        return LieAlgebra(n, brackets)


def _space(name, model, h_mats, frame_mats, c2, orientation, factors):
    return ReductiveSpace(
        name=name,
        g=model.algebra(),
        h_basis=[model.to_coords(M) for M in h_mats],
        m_frame=[model.to_coords(M) for M in frame_mats],
        c2=c2,
        orientation=orientation,
        factors=factors,
    )


def _range_ideal(n, idx):
    return [tuple(ONE if k == i else ZERO for k in range(n)) for i in idx]


# --- squashed S^7 = Sp(2) x Sp(1) / Sp(1) x Sp(1) ---------------------------------------


def squashed_s7():
    Z = zeros(2)

    def g_elem(Q, q):  # (quaternionic 2x2 matrix, element of sp(1))
        return block_diag(quaternion_matrix(Q), q)

    imag = QUATERNION_UNITS[1:]
    basis = []
    basis += [g_elem([[q, Z], [Z, Z]], Z) for q in imag]  # sp(1)_u block
    basis += [g_elem([[Z, Z], [Z, q]], Z) for q in imag]
    basis += [g_elem([[Z, x], [qneg(qconj(x)), Z]], Z) for x in QUATERNION_UNITS]
    basis += [g_elem([[Z, Z], [Z, Z]], q) for q in imag]
    model = MatrixModel(basis)
    h = [g_elem([[q, Z], [Z, Z]], Z) for q in imag] + [g_elem([[Z, Z], [Z, q]], q) for q in imag]
    r = 1 / SQRT5
    frame = [scale(r, g_elem([[Z, Z], [Z, scale(2, q)]], scale(-3, q))) for q in imag]
    frame += [g_elem([[Z, x], [qneg(qconj(x)), Z]], Z) for x in QUATERNION_UNITS]
    factors = [
        GroupFactor("Sp", 2, "sp(2)", _range_ideal(13, range(10))),
        GroupFactor("Sp", 1, "sp(1)", _range_ideal(13, range(10, 13))),
    ]
    return _space("squashed-s7", model, h, frame, mpq(1, 24), 1, factors)


# --- N(1,1) = SU(3) x SU(2) / U(1) x SU(2) --------------------------------------------------

SU2_I = [[I, ZERO], [ZERO, -I]]
SU2_J = [[ZERO, -ONE], [ONE, ZERO]]
SU2_K = [[ZERO, I], [I, ZERO]]


def n11():
    def su3_upper(a):
        M = zeros(3)
        for i in range(2):
            for j in range(2):
                M[i][j] = a[i][j]
        return M

    def g_elem(A3, a2):
        return block_diag(A3, a2)

    Z2, Z3 = zeros(2), zeros(3)
    C = [[I, ZERO, ZERO], [ZERO, I, ZERO], [ZERO, ZERO, -2 * I]]
    off = [
        madd(unit(3, 0, 2), unit(3, 2, 0), coeffs=[1, -1]),
        madd(unit(3, 0, 2), unit(3, 2, 0), coeffs=[I, I]),
        madd(unit(3, 1, 2), unit(3, 2, 1), coeffs=[1, -1]),
        madd(unit(3, 1, 2), unit(3, 2, 1), coeffs=[I, I]),
    ]
    su2 = (SU2_I, SU2_J, SU2_K)
    basis = [g_elem(su3_upper(a), Z2) for a in su2]
    basis += [g_elem(C, Z2)]
    basis += [g_elem(M, Z2) for M in off]
    basis += [g_elem(Z3, a) for a in su2]
    model = MatrixModel(basis)
    h = [g_elem(C, Z2)] + [g_elem(su3_upper(a), a) for a in su2]
    r = -1 / SQRT5
    frame = [scale(r, g_elem(su3_upper(scale(2, a)), scale(-3, a))) for a in su2]
    frame += [scale(SQRT2, g_elem(M, Z2)) for M in off]
    factors = [
        GroupFactor("SU", 3, "su(3)", _range_ideal(11, range(8))),
        GroupFactor("SU", 2, "su(2)", _range_ideal(11, range(8, 11))),
    ]
    return _space("n11", model, h, frame, mpq(1, 24), 1, factors)


# --- SO(5)/SO(3), SO(3) acting on traceless symmetric 3x3 matrices --------------------------


def so5_so3():
    n = 5
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    basis = [madd(unit(n, a, b), unit(n, b, a), coeffs=[1, -1]) for a, b in pairs]
    model = MatrixModel(basis)
    g = model.algebra()

    # orthonormal basis of traceless symmetric 3x3 matrices (trace form)
    s2, s6 = sqrt_rational(2), sqrt_rational(6)
    sym = [
        scale(1 / s2, madd(unit(3, 0, 1), unit(3, 1, 0))),
        scale(1 / s2, madd(unit(3, 0, 2), unit(3, 2, 0))),
        scale(1 / s2, madd(unit(3, 1, 2), unit(3, 2, 1))),
        scale(1 / s2, madd(unit(3, 0, 0), unit(3, 1, 1), coeffs=[1, -1])),
        scale(1 / s6, madd(unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2), coeffs=[1, 1, -2])),
    ]

    def trace_pair(A, B):
        return sum((A[i][j] * B[j][i] for i in range(3) for j in range(3)), ZERO)

    h_mats = []
    for a, b in ((0, 1), (0, 2), (1, 2)):
        X = madd(unit(3, a, b), unit(3, b, a), coeffs=[1, -1])
        M = zeros(5)
        for col, S in enumerate(sym):
            XS = commutator(X, S)
            for row, T in enumerate(sym):
                M[row][col] = trace_pair(T, XS)
        h_mats.append(M)
    h = [model.to_coords(M) for M in h_mats]

    # m = Killing complement of h; Gram-Schmidt on the projected E_ab (lexicographic)
    B = g.killing
    hh = SpanCoordinates(h)

    def project_off_h(v):
        # subtract the B-orthogonal projection onto h
        G = [[B(x, y) for y in h] for x in h]
        rhs = [B(x, v) for x in h]
        coef = solve(G, rhs)
        out = list(v)
        for c, x in zip(coef, h):
            for k in range(len(out)):
                out[k] = out[k] - c * x[k]
        return tuple(out)

    frame = []
    for k in range(len(basis)):
        v = project_off_h(g.basis_vector(k))
        for f in frame:
            c = -B(f, v)  # inner product -B, and -B(f, f) = 1
            v = tuple(x - c * y for x, y in zip(v, f))
        norm2 = -B(v, v)
        if not norm2:
            continue
        inv = 1 / sqrt_rational(norm2.rational())
        frame.append(tuple(x * inv for x in v))
        if len(frame) == 7:
            break
    assert not any(hh.contains(f) for f in frame)
    factors = [GroupFactor("Sp", 2, "so(5) = sp(2)", _range_ideal(10, range(10)))]
    for orientation in (1, -1):
        space = ReductiveSpace("so5-so3", g, h, frame, mpq(1), orientation, factors)
        try:
            nearly_parallel_data(space)
        except Exception:  # noqa: BLE001 - try the other orientation
            continue
        return space
    raise RuntimeError("no orientation makes the SO(5)/SO(3) frame nearly parallel")


BUILDERS = {"so5-so3": so5_so3, "squashed-s7": squashed_s7, "n11": n11}


def build(name):
    return BUILDERS[name]().validate()


def write_data(directory=None):
    directory = Path(directory or Path(__file__).parent / "data")
    directory.mkdir(parents=True, exist_ok=True)
    for name in BUILDERS:
        (directory / f"{name}.json").write_text(dumps_space(build(name)))


if __name__ == "__main__":
    write_data()
