"""G2 linear algebra on R^7: the fundamental 3-form, cross product, the
Lambda^k_r projectors, Bryant's i/j maps and exact identity checks.

Conventions: a 2-form alpha acts through the skew endomorphism A with
<A Y, Z> = alpha(Y, Z); on tensors the action is the derivation
(alpha_* w)(X_1,..) = -sum_j w(.., A X_j, ..). The Casimir
sum_{i<j} (e_i ^ e_j)_*^2 then equals -p(7-p) on p-forms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property

from gmpy2 import mpq

from .errors import NotIn27, NotStable, NotTraceless, ZeroTau
from .field import ONE, ZERO, FieldElem, fe
from .forms import (
    FormValuedCovector,
    KForm,
    Vector,
    basis_indices,
    contract,
    e,
    endomorphism_action,
    eps,
    hodge,
    top_coefficient,
    wedge,
)
from .linalg import FieldMatrix, inverse, rank

N = 7

_SIGMA_TERMS = (
    ((1, 2, 3), 1),
    ((1, 4, 5), 1),
    ((2, 4, 6), 1),
    ((3, 4, 7), 1),
    ((1, 6, 7), -1),
    ((2, 5, 7), 1),
    ((3, 5, 6), -1),
)


def standard_sigma():
    return KForm(N, 3, {I: c for I, c in _SIGMA_TERMS})


def vec(*coords):
    return Vector(coords)


def basis_vector(i):
    return Vector.basis(N, i)


# --- G2 frame ------------------------------------------------------------------


@dataclass(frozen=True)
class G2Frame:
    sigma: KForm
    star_sigma: KForm
    orientation: int
    cross_table: tuple  # cross_table[i][j] = P(e_{i+1}, e_{j+1})

    @cached_property
    def projectors(self):
        return projectors(self.sigma, self.orientation)


def g2_frame(sigma, orientation=1):
    table = []
    for i in range(1, N + 1):
        ci = contract(basis_vector(i), sigma)
        row = []
        for j in range(1, N + 1):
            cij = contract(basis_vector(j), ci)
            row.append(Vector([cij.terms.get((k,), ZERO) for k in range(1, N + 1)]))
        table.append(tuple(row))
    return G2Frame(sigma, hodge(sigma, orientation), orientation, tuple(table))


_STANDARD = None


def standard_g2():
    global _STANDARD
    if _STANDARD is None:
        _STANDARD = g2_frame(standard_sigma(), 1)
    return _STANDARD


def _frame(frame):
    return standard_g2() if frame is None else frame


def cross(X, Y, frame=None):
    """The cross product P(X, Y) with sigma(X, Y, Z) = <P(X, Y), Z>."""
    table = _frame(frame).cross_table
    out = [ZERO] * N
    for i, x in enumerate(X):
        if not x:
            continue
        row = table[i]
        for j, y in enumerate(Y):
            if not y:
                continue
            xy = x * y
            for k, p in enumerate(row[j].coords):
                if p:
                    out[k] = out[k] + xy * p
    return Vector(out)


def cross_of_two_form(alpha, frame=None):
    """P as a map Lambda^2 -> T: P(e^{ij}) = P(e_i, e_j)."""
    table = _frame(frame).cross_table
    out = Vector.zero(N)
    for (i, j), c in alpha.terms.items():
        out = out + table[i - 1][j - 1] * c
    return out


# --- symmetric 2-tensors ---------------------------------------------------------


class SymTensor:
    """Symmetric bilinear form on R^7 as a 7x7 grid h[a][b] = h(e_a, e_b)."""

    __slots__ = ("h",)

    def __init__(self, h):
        h = tuple(tuple(fe(x) for x in row) for row in h)
        if len(h) != N or any(len(r) != N for r in h):
            raise ValueError("expected a 7x7 grid")
        for a in range(N):
            for b in range(a):
                if h[a][b] != h[b][a]:
                    raise ValueError("tensor is not symmetric")
        self.h = h

    @classmethod
    def zero(cls):
        return cls([[ZERO] * N for _ in range(N)])

    @classmethod
    def sym(cls, a, b, coeff=1):
        """coeff * e^a (.) e^b with a (.) b = (a (x) b + b (x) a) / 2."""
        g = [[ZERO] * N for _ in range(N)]
        c = fe(coeff) * mpq(1, 2)
        g[a - 1][b - 1] = g[a - 1][b - 1] + c
        g[b - 1][a - 1] = g[b - 1][a - 1] + c
        return cls(g)

    @classmethod
    def metric(cls):
        return cls([[ONE if a == b else ZERO for b in range(N)] for a in range(N)])

    def trace(self):
        acc = ZERO
        for a in range(N):
            acc = acc + self.h[a][a]
        return acc

    def is_traceless(self):
        return not self.trace()

    def traceless_part(self):
        t = self.trace() / N
        return self - SymTensor.metric() * t

    def __add__(self, other):
        return SymTensor([[x + y for x, y in zip(r, s)] for r, s in zip(self.h, other.h)])

    def __sub__(self, other):
        return SymTensor([[x - y for x, y in zip(r, s)] for r, s in zip(self.h, other.h)])

    def __neg__(self):
        return SymTensor([[-x for x in r] for r in self.h])

    def __mul__(self, c):
        c = fe(c)
        return SymTensor([[c * x for x in r] for r in self.h])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymTensor):
            return NotImplemented
        return self.h == other.h

    def __hash__(self):
        return hash(self.h)

    def is_zero(self):
        return not any(x for r in self.h for x in r)

    def __repr__(self):
        terms = [
            f"{self.h[a][b]}*e{a + 1}.e{b + 1}" for a in range(N) for b in range(a, N) if self.h[a][b]
        ]
        return "SymTensor(" + (" + ".join(terms) or "0") + ")"


def traceless_basis():
    """Basis of S^2_0: e^a (.) e^b for a<b, then e^a (.) e^a - e^7 (.) e^7."""
    out = [SymTensor.sym(a, b) for a in range(1, N + 1) for b in range(a + 1, N + 1)]
    for a in range(1, N):
        g = [[ZERO] * N for _ in range(N)]
        g[a - 1][a - 1] = ONE
        g[N - 1][N - 1] = -ONE
        out.append(SymTensor(g))
    return out


# --- so(7) action ----------------------------------------------------------------


def skew_matrix(alpha):
    """A with A e_j = sum_k alpha(e_j, e_k) e_k, i.e. <A Y, Z> = alpha(Y, Z)."""
    n = alpha.n
    A = [[ZERO] * n for _ in range(n)]
    for (j, k), c in alpha.terms.items():
        A[k - 1][j - 1] = A[k - 1][j - 1] + c  # alpha(e_j, e_k) = c
        A[j - 1][k - 1] = A[j - 1][k - 1] - c  # alpha(e_k, e_j) = -c
    return A


def matrix_action(A, target):
    """Derivation action of an endomorphism A (A[r][c]) on vectors, forms, tensors."""
    if isinstance(target, Vector):
        n = len(target)
        return Vector(
            [sum((A[r][c] * target[c] for c in range(n) if A[r][c] and target[c]), ZERO) for r in range(n)]
        )
    if isinstance(target, KForm):
        return endomorphism_action(A, target)
    if isinstance(target, SymTensor):
        h = target.h
        # (A_* h)(e_a, e_b) = -h(A e_a, e_b) - h(e_a, A e_b)
        out = [[ZERO] * N for _ in range(N)]
        for a in range(N):
            for b in range(N):
                acc = ZERO
                for k in range(N):
                    if A[k][a] and h[k][b]:
                        acc = acc - A[k][a] * h[k][b]
                    if A[k][b] and h[a][k]:
                        acc = acc - A[k][b] * h[a][k]
                out[a][b] = acc
        return SymTensor(out)
    if isinstance(target, FormValuedCovector):
        n = target.n
        comps = [matrix_action(A, F) for F in target.components]
        # the T* slot: A_* e^i = -sum_k A[i][k] e^k
        for i, Fi in enumerate(target.components):
            if Fi.is_zero():
                continue
            for k in range(n):
                if A[i][k]:
                    comps[k] = comps[k] - Fi * A[i][k]
        return FormValuedCovector(comps)
    if isinstance(target, TensorCovector):
        comps = [matrix_action(A, h) for h in target.components]
        for i, hi in enumerate(target.components):
            for k in range(N):
                if A[i][k]:
                    comps[k] = comps[k] - hi * A[i][k]
        return TensorCovector(comps)
    raise TypeError(f"cannot act on {type(target).__name__}")


def two_form_action(alpha, target):
    return matrix_action(skew_matrix(alpha), target)


def p_action(X, target, frame=None):
    """P_X acting on ``target``; equals two_form_action(X _| sigma, target)."""
    fr = _frame(frame)
    return two_form_action(contract(X, fr.sigma), target)


def casimir_so(target):
    """sum_{i<j} (e_i ^ e_j)_* (e_i ^ e_j)_* target."""
    out = None
    for i, j in basis_indices(N, 2):
        A = skew_matrix(e(N, i, j))
        t = matrix_action(A, matrix_action(A, target))
        out = t if out is None else out + t
    return out


def sum_pp(target, frame=None):
    """sum_i P_{e_i} P_{e_i} target."""
    out = None
    for i in range(1, N + 1):
        A = skew_matrix(contract(basis_vector(i), _frame(frame).sigma))
        t = matrix_action(A, matrix_action(A, target))
        out = t if out is None else out + t
    return out


def casimir_g2(target, frame=None):
    """Casimir of g2 = Lambda^2_14 inside so(7): Cas_so7 - (1/3) sum P_{e_i}^2."""
    return casimir_so(target) - sum_pp(target, frame) * mpq(1, 3)


# Casimir eigenvalues of casimir_g2 on the irreducibles V_{p,q}
G2_CASIMIR = {
    (0, 0): mpq(0),
    (1, 0): mpq(-4),
    (0, 1): mpq(-8),
    (2, 0): mpq(-28, 3),
    (1, 1): mpq(-14),
    (3, 0): mpq(-16),
}


def isotypic_projection(target, weight, weights, frame=None):
    """Project onto the V_weight component, assuming ``target`` only meets ``weights``."""
    lam = G2_CASIMIR[weight]
    out = target
    for w in weights:
        if w == weight:
            continue
        mu = G2_CASIMIR[w]
        out = (casimir_g2(out, frame) - out * mu) * (1 / (lam - mu))
    return out


# --- projectors -------------------------------------------------------------------


def _orthogonal_projector(vectors, size):
    V = FieldMatrix.from_columns(vectors, size)
    G = V.T @ V
    return V @ inverse(G) @ V.T


@dataclass(frozen=True)
class ProjectorSet:
    """Orthogonal projectors keyed by (degree, dimension of the summand)."""

    sigma: KForm
    orientation: int
    matrices: dict = field(hash=False)

    def project(self, w, r):
        P = self.matrices[(w.k, r)]
        return KForm.from_vector(P @ w.to_vector(), w.n, w.k)

    def in_component(self, w, r):
        return self.project(w, r) == w

    def ranks(self):
        return {key: rank(P) for key, P in self.matrices.items()}


def projectors(sigma, orientation=1):
    """Build the Lambda^k_r projectors for a stable 3-form."""
    if sigma.is_zero() or sigma.k != 3 or sigma.n != N:
        raise NotStable("sigma must be a nonzero 3-form on R^7")
    star = hodge(sigma, orientation)
    l27 = [contract(basis_vector(i), sigma).to_vector() for i in range(1, N + 1)]
    l37 = [contract(basis_vector(i), star).to_vector() for i in range(1, N + 1)]
    if rank(FieldMatrix(l27)) != 7:
        raise NotStable("span{e_i _| sigma} is not 7-dimensional")
    if rank(FieldMatrix(l37)) != 7:
        raise NotStable("span{e_i _| *sigma} is not 7-dimensional")
    d2, d3 = len(basis_indices(N, 2)), len(basis_indices(N, 3))
    P2_7 = _orthogonal_projector(l27, d2)
    P3_1 = _orthogonal_projector([sigma.to_vector()], d3)
    P3_7 = _orthogonal_projector(l37, d3)
    P2_14 = FieldMatrix.identity(d2) - P2_7
    P3_27 = FieldMatrix.identity(d3) - P3_1 - P3_7
    H3 = _hodge_matrix(3, orientation)  # Lambda^3 -> Lambda^4
    H4 = _hodge_matrix(4, orientation)  # its inverse
    H2 = _hodge_matrix(2, orientation)
    H5 = _hodge_matrix(5, orientation)
    mats = {
        (2, 7): P2_7,
        (2, 14): P2_14,
        (3, 1): P3_1,
        (3, 7): P3_7,
        (3, 27): P3_27,
        (4, 1): H3 @ P3_1 @ H4,
        (4, 7): H3 @ P3_7 @ H4,
        (4, 27): H3 @ P3_27 @ H4,
        (5, 7): H2 @ P2_7 @ H5,
        (5, 14): H2 @ P2_14 @ H5,
    }
    return ProjectorSet(sigma, orientation, mats)


def _hodge_matrix(k, orientation):
    cols = [hodge(KForm(N, k, {I: ONE}), orientation).to_vector() for I in basis_indices(N, k)]
    return FieldMatrix.from_columns(cols, len(basis_indices(N, N - k)))


# --- Bryant maps --------------------------------------------------------------------


def bryant_i(h, frame=None, check=True):
    """i(h) = 2 sum_{a,b} h_ab e^a ^ (e_b _| sigma), so that
    i(a (.) b) = a ^ (b _| sigma) + b ^ (a _| sigma). Defined on traceless h."""
    fr = _frame(frame)
    if check and not h.is_traceless():
        raise NotTraceless(f"trace is {h.trace()}")
    out = KForm.zero(N, 3)
    hooks = [contract(basis_vector(b), fr.sigma) for b in range(1, N + 1)]
    for a in range(N):
        row = KForm.zero(N, 2)
        for b in range(N):
            if h.h[a][b]:
                row = row + hooks[b] * h.h[a][b]
        if row:
            out = out + wedge(e(N, a + 1), row)
    return out * 2


def in_lambda3_27(gamma, frame=None):
    fr = _frame(frame)
    return wedge(gamma, fr.sigma).is_zero() and wedge(gamma, fr.star_sigma).is_zero()


def bryant_j(gamma, frame=None, check=True):
    """j(gamma)(X, Y) = *((X _| sigma) ^ (Y _| sigma) ^ gamma)."""
    fr = _frame(frame)
    if check and not in_lambda3_27(gamma, fr):
        raise NotIn27("gamma does not lie in Lambda^3_27")
    hooks = [contract(basis_vector(b), fr.sigma) for b in range(1, N + 1)]
    wg = [wedge(hk, gamma) for hk in hooks]
    g = [[ZERO] * N for _ in range(N)]
    for a in range(N):
        for b in range(a, N):
            v = top_coefficient(wedge(hooks[a], wg[b]), fr.orientation)
            g[a][b] = g[b][a] = v
    return SymTensor(g)


def induces_metric(sigma, orientation=1):
    """True iff (e_i _| s) ^ (e_j _| s) ^ s = -6 delta_ij vol for vol = orientation e^{1..7}."""
    if sigma.k != 3 or sigma.n != N:
        return False
    hooks = [contract(basis_vector(i), sigma) for i in range(1, N + 1)]
    ws = [wedge(hk, sigma) for hk in hooks]
    for i in range(N):
        for j in range(i, N):
            v = top_coefficient(wedge(hooks[i], ws[j]), orientation)
            if v != (-6 if i == j else 0):
                return False
    return True


# --- T* (x) S^2_0 and the map Q -------------------------------------------------------


class TensorCovector:
    """Element sum_a e^a (x) h_a of T* (x) S^2; ``components[a-1] = h_a``."""

    __slots__ = ("components",)

    def __init__(self, components):
        self.components = tuple(components)

    def __add__(self, other):
        return TensorCovector([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return TensorCovector([a - b for a, b in zip(self.components, other.components)])

    def __mul__(self, c):
        return TensorCovector([a * c for a in self.components])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorCovector):
            return NotImplemented
        return self.components == other.components

    def is_zero(self):
        return all(c.is_zero() for c in self.components)


def i2_embedding(h, frame=None):
    """i_2(h) = (1 (x) pi_0) C(g (x) h), C(a(x)b(x)c(x)d) = a (x) P(b,c) (x) d."""
    fr = _frame(frame)
    comps = []
    for a in range(N):
        # M[c][d] = sum_b <P(e_a, e_b), e_c> h_bd
        M = [[ZERO] * N for _ in range(N)]
        for b in range(N):
            p = fr.cross_table[a][b]
            for c in range(N):
                if not p[c]:
                    continue
                for d in range(N):
                    if h.h[b][d]:
                        M[c][d] = M[c][d] + p[c] * h.h[b][d]
        sym = [[(M[c][d] + M[d][c]) * mpq(1, 2) for d in range(N)] for c in range(N)]
        comps.append(SymTensor(sym).traceless_part())
    return TensorCovector(comps)


def q_map(F, frame=None):
    """Q = sum_i P_{e_i} o (e_i _|) on T* (x) S^2_0."""
    out = SymTensor.zero()
    for i, hi in enumerate(F.components, start=1):
        if not hi.is_zero():
            out = out + p_action(basis_vector(i), hi, frame)
    return out


def p_contract_map(F, frame=None):
    """sum_i P_{e_i} o (e_i _|) on T* (x) Lambda^3."""
    out = KForm.zero(N, F.degree)
    for i, Fi in enumerate(F.components, start=1):
        if Fi:
            out = out + p_action(basis_vector(i), Fi, frame)
    return out


def wedge_p_map(gamma, frame=None):
    """sum_i e^i ^ P_{e_i} gamma."""
    out = KForm.zero(N, gamma.k + 1)
    for i in range(1, N + 1):
        out = out + wedge(e(N, i), p_action(basis_vector(i), gamma, frame))
    return out


# --- verification suites -----------------------------------------------------------


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteReport:
    title: str
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def as_dict(self):
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def random_field_elem(rng, max_terms=2, bound=3):
    masks = (0, 0, 0, 1, 2, 4, 8, 3, 6, 9, 14)
    x = ZERO
    for _ in range(rng.randint(0, max_terms)):
        q = mpq(rng.randint(-bound, bound), rng.randint(1, bound))
        x = x + FieldElem.monomial(rng.choice(masks), q)
    return x


def random_vector(rng, n=N):
    return Vector([random_field_elem(rng) for _ in range(n)])


def _identity_checks(fr, X, Y, Z):
    s, ss = fr.sigma, fr.star_sigma
    o = fr.orientation
    P = lambda a, b: cross(a, b, fr)  # noqa: E731
    Xf, Yf = X.as_form(), Y.as_form()
    xs = contract(X, s)
    out = {}
    out["X x Y is orthogonal to X and Y"] = not P(X, Y).dot(X) and not P(X, Y).dot(Y)
    out["|X x Y|^2 = |X|^2 |Y|^2 - <X,Y>^2"] = P(X, Y).dot(P(X, Y)) == X.dot(X) * Y.dot(Y) - X.dot(Y) * X.dot(Y)
    out["<X x Y, Z> = <X, Y x Z>"] = P(X, Y).dot(Z) == X.dot(P(Y, Z))
    out["X x (X x Y) = -|X|^2 Y + <X,Y> X"] = P(X, P(X, Y)) == Y * (-X.dot(X)) + X * X.dot(Y)
    out["2 (X x Y) x Z = (Y x Z) x X + (Z x X) x Y + 3<X,Z> Y - 3<Y,Z> X"] = P(P(X, Y), Z) * 2 == (
        P(P(Y, Z), X) + P(P(Z, X), Y) + Y * (3 * X.dot(Z)) - X * (3 * Y.dot(Z))
    )
    out["(X _| s) ^ s = -2 X ^ *s"] = wedge(xs, s) == wedge(Xf, ss) * -2
    out["(X _| s) ^ *s = 3 *X"] = wedge(xs, ss) == hodge(Xf, o) * 3
    sum3 = KForm.zero(N, 3)
    sum4 = KForm.zero(N, 3)
    for i in range(1, N + 1):
        ei = basis_vector(i)
        v = contract(ei, xs)  # 1-form e_i _| X _| sigma
        if v:
            vv = Vector([v.terms.get((k,), ZERO) for k in range(1, N + 1)])
            sum3 = sum3 + contract(vv, wedge(e(N, i), s))
            sum4 = sum4 + wedge(v, contract(ei, s))
    out["sum (e_i _| X _| s) _| (e^i ^ s) = 3 X _| *s"] = sum3 == contract(X, ss) * 3
    out["sum (e_i _| X _| s) ^ (e_i _| s) = 3 X _| *s"] = sum4 == contract(X, ss) * 3
    xy = contract(X, contract(Y, s))
    xyv = Vector([xy.terms.get((k,), ZERO) for k in range(1, N + 1)])
    out["(X _| Y _| s) _| s + X _| Y _| *s = -X ^ Y"] = contract(xyv, s) + contract(X, contract(Y, ss)) == -wedge(Xf, Yf)
    out["P(X _| s) = 3 X"] = cross_of_two_form(xs, fr) == X * 3
    out["P_X sigma = 3 X _| *sigma"] = p_action(X, s, fr) == contract(X, ss) * 3
    return out


def identity_suite(frame=None, samples=100, seed=0):
    """Exact checks of the cross-product and 3-form identities."""
    fr = _frame(frame)
    names = None
    ok = {}
    counts = {}
    basis = [basis_vector(i) for i in range(1, N + 1)]
    rng = random.Random(seed)
    triples = [(X, Y, Z) for X in basis for Y in basis for Z in basis[:1]]
    triples += [(basis[0], basis[1], Z) for Z in basis] + [(X, basis[2], basis[5]) for X in basis]
    triples += [(random_vector(rng), random_vector(rng), random_vector(rng)) for _ in range(samples)]
    for X, Y, Z in triples:
        res = _identity_checks(fr, X, Y, Z)
        if names is None:
            names = list(res)
            ok = {k: True for k in names}
            counts = {k: 0 for k in names}
        for k, v in res.items():
            counts[k] += 1
            ok[k] = ok[k] and v
    # the double cross product identity on all basis triples
    triple_ok = True
    for X in basis:
        for Y in basis:
            for Z in basis:
                P = lambda a, b: cross(a, b, fr)  # noqa: E731
                if P(P(X, Y), Z) * 2 != (
                    P(P(Y, Z), X) + P(P(Z, X), Y) + Y * (3 * X.dot(Z)) - X * (3 * Y.dot(Z))
                ):
                    triple_ok = False
    ok["2 (X x Y) x Z = (Y x Z) x X + (Z x X) x Y + 3<X,Z> Y - 3<Y,Z> X"] = ok["2 (X x Y) x Z = (Y x Z) x X + (Z x X) x Y + 3<X,Z> Y - 3<Y,Z> X"] and triple_ok
    checks = [Check(k, ok[k], f"{counts[k]} inputs") for k in names]
    if fr.sigma == standard_sigma():
        got = bryant_i(SymTensor.sym(1, 2), fr)
        want = e(N, 1, 4, 6) + e(N, 1, 5, 7) + e(N, 2, 4, 5) - e(N, 2, 6, 7)
        checks.append(Check("i(e1.e2) = e146 + e157 + e245 - e267", got == want, str(got)))
    basis27 = traceless_basis()
    ji = all(bryant_j(bryant_i(h, fr), fr) == h * -8 for h in basis27)
    checks.append(Check("j o i = -8 id on S^2_0", ji, f"{len(basis27)} basis tensors"))
    return SuiteReport("identity suite", checks)


def lambda3_27_basis(frame=None):
    fr = _frame(frame)
    return [bryant_i(h, fr) for h in traceless_basis()]


def schur_suite(frame=None):
    """Exact checks of the Schur constants of the G2-equivariant maps."""
    fr = _frame(frame)
    o = fr.orientation
    checks = []
    for p, expected in ((1, -6), (2, -10), (3, -12)):
        ok = all(
            casimir_so(KForm(N, p, {I: ONE})) == KForm(N, p, {I: ONE}) * expected
            for I in basis_indices(N, p)
        )
        checks.append(Check(f"Cas_so(7) = {expected} on Lambda^{p}", ok, "all monomials"))
    gammas = lambda3_27_basis(fr)
    checks.append(
        Check("sum P_i P_i = -8 on Lambda^3_27", all(sum_pp(g, fr) == g * -8 for g in gammas), "27 basis forms")
    )
    s2 = traceless_basis()
    checks.append(
        Check("sum P_i P_i = -14 on S^2_0", all(sum_pp(h, fr) == h * -14 for h in s2), "27 basis tensors")
    )
    checks.append(
        Check("Cas_so(7) = -14 on S^2_0", all(casimir_so(h) == h * -14 for h in s2), "27 basis tensors")
    )
    checks.append(
        Check(
            "sum e^i ^ P_{e_i} = -2 * on Lambda^3_27",
            all(wedge_p_map(g, fr) == hodge(g, o) * -2 for g in gammas),
            "27 basis forms",
        )
    )
    checks.append(
        Check("Q o i_2 = -7 id on S^2_0", all(q_map(i2_embedding(h, fr), fr) == h * -7 for h in s2), "27 basis tensors")
    )
    # component constants on T* (x) Lambda^3_27
    comps = (((1, 0), -3), ((2, 0), 1))
    weights = [(1, 0), (2, 0), (0, 1), (1, 1), (3, 0)]
    for generator in _component_generators(fr):
        for weight, const in comps:
            F = isotypic_projection(generator, weight, weights, fr)
            eigen = casimir_g2(F, fr) == F * G2_CASIMIR[weight]
            lhs = p_contract_map(F, fr)
            rhs = hodge(eps(F), o) * const
            label = "T" if weight == (1, 0) else "Lambda^3_27"
            checks.append(
                Check(
                    f"sum P_i o e_i_| = {const} * o eps on {label} component",
                    eigen and not F.is_zero() and lhs == rhs,
                    "nonzero isotypic projection" if not F.is_zero() else "empty projection",
                )
            )
        break
    # the other components are killed
    generator = _component_generators(fr)[0]
    others = all(
        p_contract_map(isotypic_projection(generator, w, weights, fr), fr).is_zero()
        for w in ((0, 1), (1, 1), (3, 0))
    )
    checks.append(Check("sum P_i o e_i_| = 0 on V01, V11, V30 components", others, ""))
    return SuiteReport("schur suite", checks)


def _component_generators(fr):
    g12 = bryant_i(SymTensor.sym(1, 2), fr)
    g34 = bryant_i(SymTensor.sym(3, 4), fr)
    comps = [KForm.zero(N, 3)] * N
    comps = list(comps)
    comps[0] = g12
    comps[2] = g34
    return [FormValuedCovector(comps)]


# --- eigenvalue bookkeeping ---------------------------------------------------------


@dataclass(frozen=True)
class EigenBookkeeping:
    tau0: FieldElem
    roots: tuple  # solutions of lam^2 + (tau0/2) lam - tau0^2/2 = 0
    laplace_eigenvalues: tuple  # (5 tau0^2/6, tau0^2/3, tau0^2/2)
    c: FieldElem  # constant in (d_bar + c *) phi = 0, c = 5 tau0 / 6
    casimir_targets: tuple  # Casimir values for the three eigenvalues


def laplace_eigen_bookkeeping(tau0):
    tau0 = fe(tau0)
    if not tau0:
        raise ZeroTau("tau0 must be nonzero")
    half = mpq(1, 2)
    roots = (-tau0, tau0 * half)
    for lam in roots:
        assert lam * lam + tau0 * half * lam - tau0 * tau0 * half == 0
    t2 = tau0 * tau0
    # closed case first; eigenvalues lam^2 + (tau0/6) lam for the coclosed ones
    coclosed = tuple(lam * lam + tau0 * mpq(1, 6) * lam for lam in roots)
    eigenvalues = coclosed + (t2 * half,)
    assert eigenvalues == (t2 * mpq(5, 6), t2 * mpq(1, 3), t2 * half)
    # Cas = -c^2 * eigenvalue with c^2 = 6 / (5 tau0^2)
    c2 = mpq(6, 5) / t2
    targets = tuple(-(c2 * ev) for ev in eigenvalues)
    return EigenBookkeeping(tau0, roots, eigenvalues, tau0 * mpq(5, 6), targets)
