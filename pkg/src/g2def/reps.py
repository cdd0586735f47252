"""Casimir values of Sp(n) and SU(n) representations, bounded enumeration of
highest weights, adjoint modules and H-equivariant maps into Lambda^3_27."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from gmpy2 import mpq

from .errors import BadWeight, NotAnIdeal
from .field import ZERO
from .forms import KForm, endomorphism_action
from .g2 import bryant_i, traceless_basis
from .linalg import Echelon, FieldMatrix, SpanCoordinates, combine

# Casimir targets for the three eigenvalues in the Laplace bookkeeping
TARGETS = (mpq(-1), mpq(-2, 5), mpq(-3, 5))


def _check_int_weight(weight, n):
    if len(weight) != n:
        raise BadWeight(f"expected {n} entries, got {len(weight)}")
    if any(not isinstance(k, int) or isinstance(k, bool) for k in weight):
        raise BadWeight("weights must be integers")
    if any(weight[i] < weight[i + 1] for i in range(n - 1)):
        raise BadWeight(f"weight {tuple(weight)} is not non-increasing")


def cas_sp(n, weight):
    """Casimir of V(k_1..k_n) of Sp(n): -(1/(4(n+1))) sum (2(n-i+1) k_i + k_i^2)."""
    weight = tuple(weight)
    _check_int_weight(weight, n)
    if weight and weight[-1] < 0:
        raise BadWeight("Sp weights must be non-negative")
    s = sum(2 * (n - i + 1) * k + k * k for i, k in enumerate(weight, start=1))
    return mpq(-s, 4 * (n + 1))


def normalize_su(n, weight):
    """Shift all entries by a common integer so that -n/2 < sum <= n/2."""
    weight = tuple(weight)
    _check_int_weight(weight, n)
    s = sum(weight)
    # find integer t with -n < 2(s + n t) <= n
    t = (n - 2 * s) // (2 * n)
    while 2 * (s + n * t) > n:
        t -= 1
    while 2 * (s + n * t) <= -n:
        t += 1
    return tuple(k + t for k in weight)


def cas_su(n, weight):
    """Casimir of V(k_1..k_n) of SU(n):
    -(1/(2n)) sum ((n+1-2i) k_i + k_i^2) + (1/(2n^2)) (sum k_i)^2."""
    k = normalize_su(n, weight)
    a = sum((n + 1 - 2 * i) * ki + ki * ki for i, ki in enumerate(k, start=1))
    s = sum(k)
    return mpq(-a, 2 * n) + mpq(s * s, 2 * n * n)


def cas_product(values):
    return sum((mpq(v) for v in values), mpq(0))


def casimir(family, n, weight):
    if family == "Sp":
        return cas_sp(n, weight)
    if family == "SU":
        return cas_su(n, weight)
    raise BadWeight(f"unknown family {family!r}")


def weight_from_dynkin(family, n, labels):
    """Highest weight (k_1..k_n) from Dynkin labels a_i = k_i - k_{i+1} (and a_n = k_n for Sp)."""
    if family == "Sp":
        k = [sum(labels[i:]) for i in range(n)]
        return tuple(k)
    # SU(n): n-1 labels, k_n = 0 before normalization
    k = [sum(labels[i:]) for i in range(n - 1)] + [0]
    return normalize_su(n, k)


def adjoint_weight(family, n):
    if family == "Sp":
        return (2,) + (0,) * (n - 1)
    return normalize_su(n, (1,) + (0,) * (n - 2) + (-1,))


@dataclass
class FactorBox:
    """Search box in Dynkin labels for one simple factor."""

    family: str
    rank: int
    label: str
    bounds: tuple  # max value of each Dynkin label
    boundary_casimirs: tuple  # Casimir of (bound + 1) * fundamental weight, all < min target

    def as_dict(self):
        return {
            "family": self.family,
            "rank": self.rank,
            "label": self.label,
            "dynkin_bounds": list(self.bounds),
            "boundary_casimirs": [_fmt(c) for c in self.boundary_casimirs],
        }


def _fmt(q):
    q = mpq(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _nlabels(family, n):
    return n if family == "Sp" else n - 1


def search_box(family, n, floor, label=""):
    """Bound each Dynkin label so that every weight with Casimir >= floor lies in the box.

    Casimir is minus a positive quadratic form in the Dynkin labels with
    non-negative cross terms, so Cas(sum a_j w_j) <= Cas(a_i w_i); bounding
    each single-label ray bounds the whole set.
    """
    bounds, boundary = [], []
    m = _nlabels(family, n)
    for i in range(m):
        a = 0
        while True:
            labels = [0] * m
            labels[i] = a + 1
            c = casimir(family, n, weight_from_dynkin(family, n, labels))
            if c < floor:
                break
            a += 1
        labels = [0] * m
        labels[i] = a + 1
        bc = casimir(family, n, weight_from_dynkin(family, n, labels))
        assert bc < floor
        bounds.append(a)
        boundary.append(bc)
    return FactorBox(family, n, label, tuple(bounds), tuple(boundary))


@dataclass
class Candidate:
    weights: tuple  # one highest weight per factor
    casimir: mpq
    module: str | None = None  # label of the adjoint summand it is, or None (UNRESOLVED)
    factor_index: int | None = None

    def as_dict(self, factors):
        return {
            "weight": [list(w) for w in self.weights],
            "weight_text": " (x) ".join(f"{f.family}({f.rank}){tuple(w)}" for f, w in zip(factors, self.weights)),
            "casimir": _fmt(self.casimir),
            "module": self.module if self.module else "UNRESOLVED",
        }


@dataclass
class Enumeration:
    factors: list
    targets: tuple
    boxes: list
    candidates: list = field(default_factory=list)


def enumerate_candidates(factors, targets=TARGETS):
    """All highest weights of G = prod factors whose Casimir is in ``targets``."""
    targets = tuple(sorted({mpq(t) for t in targets}))
    floor = min(targets)
    boxes = [search_box(f.family, f.rank, floor, f.label) for f in factors]
    per_factor = []
    for f, box in zip(factors, boxes):
        ws = []
        for labels in itertools.product(*(range(b + 1) for b in box.bounds)):
            w = weight_from_dynkin(f.family, f.rank, labels)
            c = casimir(f.family, f.rank, w)
            if c >= floor:
                ws.append((w, c))
        per_factor.append(ws)
    out = []
    for combo in itertools.product(*per_factor):
        total = cas_product(c for _, c in combo)
        if total in targets:
            weights = tuple(w for w, _ in combo)
            out.append(Candidate(weights, total))
    for cand in out:
        _identify(cand, factors)
    out.sort(key=lambda c: (c.casimir, c.weights))
    return Enumeration(list(factors), targets, boxes, out)


def _identify(cand, factors):
    """Tag a candidate that is the adjoint representation of one simple factor."""
    nontrivial = [
        i for i, (f, w) in enumerate(zip(factors, cand.weights))
        if w != weight_from_dynkin(f.family, f.rank, [0] * _nlabels(f.family, f.rank))
    ]
    if len(nontrivial) == 1:
        i = nontrivial[0]
        f = factors[i]
        if cand.weights[i] == adjoint_weight(f.family, f.rank):
            cand.module = f.label
            cand.factor_index = i


# --- adjoint modules ------------------------------------------------------------------


class AdjointModule:
    """A simple ideal U of g with g acting by brackets."""

    def __init__(self, space, summand):
        if not 0 <= summand < len(space.factors):
            raise NotAnIdeal(f"space has no summand {summand}")
        f = space.factors[summand]
        self.space = space
        self.summand = summand
        self.label = f.label
        self.basis = [tuple(v) for v in f.ideal]
        try:
            self._coords = SpanCoordinates(self.basis)
        except ValueError as exc:
            raise NotAnIdeal(f"{f.label}: basis is linearly dependent") from exc
        g = space.g
        for j in range(g.dim):
            for v in self.basis:
                if not self._coords.contains(g.bracket(g.basis_vector(j), v)):
                    raise NotAnIdeal(f"{f.label} is not closed under brackets with g")

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, v):
        return self._coords.coords(v)

    def vector(self, coords):
        return combine(coords, self.basis, self.space.dim)

    def action_matrix(self, X):
        """R with [X, u_b] = sum_a R[a][b] u_a."""
        g = self.space.g
        cols = [self.coords(g.bracket(X, u)) for u in self.basis]
        return [[cols[b][a] for b in range(self.dim)] for a in range(self.dim)]

    def commutant_dimension(self):
        """dim of {T : T R = R T for all R in ad(g)|_U} over K; 1 means real type."""
        mats = [self.action_matrix(self.space.g.basis_vector(j)) for j in range(self.space.dim)]
        d = self.dim
        ech = Echelon(d * d)
        for R in mats:
            for i in range(d):
                for j in range(d):
                    # (T R - R T)[i][j] = sum_k T[i][k] R[k][j] - R[i][k] T[k][j]
                    row = {}
                    for k in range(d):
                        if R[k][j]:
                            row[i * d + k] = row.get(i * d + k, ZERO) + R[k][j]
                        if R[i][k]:
                            row[k * d + j] = row.get(k * d + j, ZERO) - R[i][k]
                    if any(row.values()):
                        ech.add(row)
        return d * d - ech.rank


def adjoint_module(space, summand):
    return AdjointModule(space, summand)


# --- intertwiners -----------------------------------------------------------------------


@dataclass
class Intertwiner:
    """Linear map U -> Lambda^3 m*; ``columns[b]`` is the image of the b-th U-basis vector."""

    module: AdjointModule
    columns: list  # KForms

    def __call__(self, u):
        """Image of a g-vector lying in U."""
        c = self.module.coords(u)
        out = KForm.zero(7, 3)
        for x, col in zip(c, self.columns):
            if x:
                out = out + col * x
        return out

    def matrix(self):
        return FieldMatrix.from_columns([col.to_vector() for col in self.columns], 35)

    def __add__(self, other):
        return Intertwiner(self.module, [a + b for a, b in zip(self.columns, other.columns)])

    def __mul__(self, c):
        return Intertwiner(self.module, [a * c for a in self.columns])

    __rmul__ = __mul__

    def is_zero(self):
        return all(c.is_zero() for c in self.columns)


class Lambda27Model:
    """Lambda^3_27 m* for a nearly parallel space, with the isotropy action in a fixed basis."""

    def __init__(self, space, npd):
        self.space = space
        self.npd = npd
        frame = npd.frame
        self.basis = [bryant_i(h, frame) for h in traceless_basis()]
        self._coords = SpanCoordinates([g.to_vector() for g in self.basis])

    def coords(self, gamma):
        return self._coords.coords(gamma.to_vector())

    @cached_property
    def isotropy(self):
        """For each h-basis X, L with X . gamma_s = sum_r L[r][s] gamma_r."""
        mats = []
        for M in self.space.isotropy_matrices:
            cols = [self.coords(endomorphism_action(M, g)) for g in self.basis]
            mats.append([[cols[s][r] for s in range(27)] for r in range(27)])
        return mats


def intertwiner_space(U, space, npd, lam27=None):
    """Basis of Hom_H(U, Lambda^3_27 m*) over K (complexified dimension)."""
    lam27 = lam27 or Lambda27Model(space, npd)
    d = U.dim
    nunk = 27 * d  # unknown x[r][b] at index r * d + b
    ech = Echelon(nunk)
    for X, L in zip(space.h_basis, lam27.isotropy):
        R = U.action_matrix(X)
        # A(X . u_b) - X . A(u_b) = sum_a R[a][b] x[:, a] - L x[:, b]
        for b in range(d):
            for r in range(27):
                row = {}
                for a in range(d):
                    if R[a][b]:
                        row[r * d + a] = row.get(r * d + a, ZERO) + R[a][b]
                for s in range(27):
                    if L[r][s]:
                        key = s * d + b
                        row[key] = row.get(key, ZERO) - L[r][s]
                row = {k: v for k, v in row.items() if v}
                if row:
                    ech.add(row)
    out = []
    for vec in ech.nullspace():
        cols = []
        for b in range(d):
            col = KForm.zero(7, 3)
            for r in range(27):
                x = vec[r * d + b]
                if x:
                    col = col + lam27.basis[r] * x
            cols.append(col)
        out.append(Intertwiner(U, cols))
    return out


def is_equivariant(A, space):
    U = A.module
    for X, M in zip(space.h_basis, space.isotropy_matrices):
        for u in U.basis:
            lhs = A(space.g.bracket(X, u))
            rhs = endomorphism_action(M, A(u))
            if lhs != rhs:
                return False
    return True


def hom_dimension(U, space, npd):
    return len(intertwiner_space(U, space, npd))


def real_type(U):
    return U.commutant_dimension() == 1


__all__ = [
    "TARGETS",
    "cas_sp",
    "cas_su",
    "cas_product",
    "normalize_su",
    "enumerate_candidates",
    "search_box",
    "AdjointModule",
    "adjoint_module",
    "Intertwiner",
    "intertwiner_space",
    "Lambda27Model",
    "is_equivariant",
    "real_type",
]
