"""Exact dense/sparse linear algebra over K = Q(i, sqrt2, sqrt3, sqrt5).

Elimination uses the first-nonzero pivot rule: every pivot row is normalised
to a leading 1 in its smallest column, and an incoming row is reduced against
existing pivots in increasing column order. Results are deterministic given
the row order.
"""

from __future__ import annotations

from .errors import DimensionMismatch, DivisionByZero
from .field import ONE, ZERO, FieldElem, fe


class FieldMatrix:
    """Dense rows x cols grid of FieldElem. Treated as immutable."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        entries = [tuple(fe(x) for x in row) for row in entries]
        if cols is None:
            cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != cols:
                raise DimensionMismatch("ragged matrix rows")
        self.rows = len(entries)
        self.cols = cols
        self.entries = tuple(entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[ZERO] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls([[c[i] for c in columns] for i in range(rows)], len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    @property
    def shape(self):
        return (self.rows, self.cols)

    def transpose(self):
        return FieldMatrix([self.column(j) for j in range(self.cols)], self.rows)

    T = property(transpose)

    def __eq__(self, other):
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        return FieldMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols
        )

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} - {other.shape}")
        return FieldMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)], self.cols
        )

    def scale(self, c):
        c = fe(c)
        return FieldMatrix([[c * a for a in r] for r in self.entries], self.cols)

    def __matmul__(self, other):
        if isinstance(other, FieldMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            ocols = [[(k, x) for k, x in enumerate(other.column(j)) if x] for j in range(other.cols)]
            out = []
            for r in self.entries:
                out.append([_dot_sparse(r, oc) for oc in ocols])
            return FieldMatrix(out, other.cols)
        vec = tuple(fe(x) for x in other)
        if len(vec) != self.cols:
            raise DimensionMismatch(f"{self.shape} @ vector of length {len(vec)}")
        nz = [(k, x) for k, x in enumerate(vec) if x]
        return tuple(_dot_sparse(r, nz) for r in self.entries)

    def is_zero(self):
        return all(not x for r in self.entries for x in r)

    def __repr__(self):
        return f"FieldMatrix({self.rows}x{self.cols})"


def _dot_sparse(row, nz):
    acc = ZERO
    for k, x in nz:
        a = row[k]
        if a:
            acc = acc + a * x
    return acc


class Echelon:
    """Incremental row echelon form over K with sparse rows ``{col: value}``.

    Pivot rows have their smallest column as pivot, normalised to 1.
    """

    def __init__(self, ncols):
        self.ncols = ncols
        self.pivots = {}  # pivot column -> row dict

    def reduce(self, row):
        """Reduce ``row`` (dict, consumed) against current pivots; return remainder."""
        row = {c: v for c, v in row.items() if v}
        pivots = self.pivots
        done = set()
        while True:
            cands = [c for c in row if c in pivots and c not in done]
            if not cands:
                return row
            c = min(cands)
            f = row[c]
            for k, v in pivots[c].items():
                nv = row.get(k, ZERO) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            done.add(c)

    def add(self, row):
        """Insert a row; return True if it increased the rank."""
        for c in row:
            if not 0 <= c < self.ncols:
                raise DimensionMismatch(f"column {c} out of range {self.ncols}")
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inv()
        self.pivots[p] = {k: (ONE if k == p else v * inv) for k, v in row.items()}
        return True

    @property
    def rank(self):
        return len(self.pivots)

    def nullspace(self):
        """Basis of the solution space of the inserted homogeneous system.

        One vector per free column f (ascending), with x_f = 1 and the other
        free variables 0.
        """
        n = self.ncols
        order = sorted(self.pivots, reverse=True)
        basis = []
        for f in range(n):
            if f in self.pivots:
                continue
            x = {f: ONE}
            for p in order:
                if p > f:
                    continue
                acc = ZERO
                for k, v in self.pivots[p].items():
                    if k != p:
                        xv = x.get(k)
                        if xv:
                            acc = acc + v * xv
                if acc:
                    x[p] = -acc
            basis.append(tuple(x.get(j, ZERO) for j in range(n)))
        return basis


def _sparse_rows(M):
    return [{j: x for j, x in enumerate(r) if x} for r in M.entries]


def _as_matrix(M):
    return M if isinstance(M, FieldMatrix) else FieldMatrix(M)


def rank(M):
    M = _as_matrix(M)
    ech = Echelon(M.cols)
    for r in _sparse_rows(M):
        ech.add(r)
    return ech.rank


def nullspace(M):
    """Exact basis of {x : M x = 0} as a list of tuples."""
    M = _as_matrix(M)
    ech = Echelon(M.cols)
    for r in _sparse_rows(M):
        ech.add(r)
    return ech.nullspace()


def solve(M, b):
    """One solution x of M x = b, or None when the system is inconsistent."""
    M = _as_matrix(M)
    b = [fe(x) for x in b]
    if len(b) != M.rows:
        raise DimensionMismatch("right-hand side length")
    n = M.cols
    ech = Echelon(n + 1)
    for r, bi in zip(_sparse_rows(M), b):
        if bi:
            r[n] = -bi
        ech.add(r)
    if n in ech.pivots:
        return None
    # x_n plays the role of the constant 1; other free variables set to 0
    x = {n: ONE}
    for p in sorted(ech.pivots, reverse=True):
        acc = ZERO
        for k, v in ech.pivots[p].items():
            if k != p and k in x:
                acc = acc + v * x[k]
        if acc:
            x[p] = -acc
    return tuple(x.get(j, ZERO) for j in range(n))


def inverse(M):
    M = _as_matrix(M)
    if M.rows != M.cols:
        raise DimensionMismatch("inverse of a non-square matrix")
    n = M.rows
    cols = []
    for j in range(n):
        e = [ONE if i == j else ZERO for i in range(n)]
        x = solve(M, e)
        if x is None:
            raise DivisionByZero("matrix is singular")
        cols.append(x)
    return FieldMatrix.from_columns(cols, n)


class SpanCoordinates:
    """Coordinates of vectors with respect to a fixed linearly independent list."""

    def __init__(self, basis):
        self.basis = [tuple(fe(x) for x in v) for v in basis]
        if not self.basis:
            raise ValueError("empty basis")
        self.dim = len(self.basis[0])
        r = len(self.basis)
        # independent coordinate rows of the dim x r matrix with the basis as columns
        ech = Echelon(self.dim)
        for v in self.basis:
            ech.add({j: x for j, x in enumerate(v) if x})
        if ech.rank != r:
            raise ValueError("basis vectors are linearly dependent")
        self.rows = sorted(ech.pivots)
        square = FieldMatrix([[v[i] for v in self.basis] for i in self.rows], r)
        self._inv = inverse(square)

    def coords(self, v, check=True):
        """Coefficients c with sum c_k basis_k = v; ValueError if v is outside the span."""
        v = tuple(fe(x) for x in v)
        c = self._inv @ [v[i] for i in self.rows]
        if check:
            recon = combine(c, self.basis, self.dim)
            if recon != v:
                raise ValueError("vector is not in the span")
        return c

    def contains(self, v):
        try:
            self.coords(v)
        except ValueError:
            return False
        return True


def combine(coeffs, vectors, dim):
    out = [ZERO] * dim
    for c, v in zip(coeffs, vectors):
        if c:
            for j, x in enumerate(v):
                if x:
                    out[j] = out[j] + c * x
    return tuple(out)


def dot(u, v):
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


__all__ = [
    "FieldMatrix",
    "FieldElem",
    "Echelon",
    "rank",
    "nullspace",
    "solve",
    "inverse",
    "SpanCoordinates",
    "combine",
    "dot",
]
