"""Lie algebras given by structure constants and 7-dimensional reductive
homogeneous spaces g = h + m with an orthonormal frame of m."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path

from gmpy2 import mpq

from .errors import DimensionMismatch, InvariantViolation, NotNearlyParallel, NotSkew, ParseError
from .field import ZERO, FieldElem, fe, format_rational, parse_field, rational, sqrt_rational
from .forms import KForm, endomorphism_action, inner
from .g2 import g2_frame, induces_metric
from .linalg import SpanCoordinates, combine

BUILTINS = ("so5-so3", "squashed-s7", "n11")


class LieAlgebra:
    """Structure constants [b_i, b_j] = sum_k c_ij^k b_k, stored for i < j (0-based)."""

    def __init__(self, dim, brackets):
        self.dim = dim
        clean = {}
        for (i, j), row in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatch(f"bracket index ({i}, {j}) outside 0..{dim - 1}")
            row = {k: fe(v) for k, v in row.items() if fe(v)}
            if any(not 0 <= k < dim for k in row):
                raise DimensionMismatch("structure constant index out of range")
            if i == j:
                if row:
                    raise InvariantViolation("antisymmetry", f"[b{i + 1}, b{i + 1}] != 0")
                continue
            if i > j:
                i, j = j, i
                row = {k: -v for k, v in row.items()}
            if (i, j) in clean and clean[(i, j)] != row:
                raise InvariantViolation("antisymmetry", f"conflicting entries for [b{i + 1}, b{j + 1}]")
            if row:
                clean[(i, j)] = row
        self.brackets = clean

    def basis_bracket(self, i, j):
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        return {k: -v for k, v in self.brackets.get((j, i), {}).items()}

    def bracket(self, X, Y):
        if len(X) != self.dim or len(Y) != self.dim:
            raise DimensionMismatch("vectors do not match the algebra dimension")
        out = [ZERO] * self.dim
        xs = [(i, x) for i, x in enumerate(X) if x]
        ys = [(j, y) for j, y in enumerate(Y) if y]
        for i, x in xs:
            for j, y in ys:
                if i == j:
                    continue
                row = self.basis_bracket(i, j)
                if not row:
                    continue
                xy = x * y
                for k, c in row.items():
                    out[k] = out[k] + xy * c
        return tuple(out)

    def basis_vector(self, i):
        return tuple(fe(1) if k == i else ZERO for k in range(self.dim))

    def ad(self, X):
        """Matrix of ad_X: column j holds [X, b_j]."""
        cols = [self.bracket(X, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    @cached_property
    def killing_matrix(self):
        ads = [self.ad(self.basis_vector(i)) for i in range(self.dim)]
        n = self.dim
        B = [[ZERO] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                A, C = ads[a], ads[b]
                acc = ZERO
                for i in range(n):
                    Ai = A[i]
                    for k in range(n):
                        if Ai[k] and C[k][i]:
                            acc = acc + Ai[k] * C[k][i]
                B[a][b] = B[b][a] = acc
        return B

    def killing(self, X, Y):
        """B(X, Y) = tr(ad X ad Y)."""
        if len(X) != self.dim or len(Y) != self.dim:
            raise DimensionMismatch("vectors do not match the algebra dimension")
        B = self.killing_matrix
        acc = ZERO
        for a, x in enumerate(X):
            if not x:
                continue
            for b, y in enumerate(Y):
                if y and B[a][b]:
                    acc = acc + x * y * B[a][b]
        return acc

    def jacobi_violations(self):
        bad = []
        n = self.dim
        for i in range(n):
            bi = self.basis_vector(i)
            for j in range(i + 1, n):
                bj = self.basis_vector(j)
                for k in range(j + 1, n):
                    bk = self.basis_vector(k)
                    s = _vsum(
                        self.bracket(bi, self.bracket(bj, bk)),
                        self.bracket(bj, self.bracket(bk, bi)),
                        self.bracket(bk, self.bracket(bi, bj)),
                    )
                    if any(s):
                        bad.append((i + 1, j + 1, k + 1))
        return bad


def _vsum(*vs):
    return tuple(sum(xs, ZERO) for xs in zip(*vs))


@dataclass
class GroupFactor:
    """A simple factor of the compact group G, with its ideal inside g."""

    family: str  # "Sp" or "SU"
    rank: int
    label: str
    ideal: list  # basis vectors of the ideal, in g-coordinates


@dataclass
class ReductiveSpace:
    name: str
    g: LieAlgebra
    h_basis: list
    m_frame: list
    c2: mpq
    orientation: int = 1
    factors: list = field(default_factory=list)

    def __post_init__(self):
        self.h_basis = [tuple(fe(x) for x in v) for v in self.h_basis]
        self.m_frame = [tuple(fe(x) for x in v) for v in self.m_frame]
        self.c2 = mpq(self.c2)

    @property
    def dim(self):
        return self.g.dim

    @cached_property
    def _split(self):
        try:
            return SpanCoordinates(self.h_basis + self.m_frame)
        except ValueError as exc:
            raise InvariantViolation("h + m basis", "h basis and m frame are not a basis of g") from exc

    def split(self, v):
        """(h-coordinates, m-coordinates) of a g-vector."""
        c = self._split.coords(v)
        nh = len(self.h_basis)
        return c[:nh], c[nh:]

    def m_coords(self, v):
        return self.split(v)[1]

    def metric(self, X, Y):
        return -self.g.killing(X, Y) * self.c2

    def validate(self):
        """Check every structural invariant; raise InvariantViolation on the first failure."""
        g = self.g
        if len(self.m_frame) != 7:
            raise InvariantViolation("frame size", f"m frame has {len(self.m_frame)} vectors, expected 7")
        if any(len(v) != g.dim for v in self.h_basis + self.m_frame):
            raise InvariantViolation("vector length", f"vectors must have {g.dim} coordinates")
        if len(self.h_basis) + 7 != g.dim:
            raise InvariantViolation("h + m basis", f"dim h + 7 != dim g = {g.dim}")
        if self.orientation not in (1, -1):
            raise InvariantViolation("orientation", "must be 1 or -1")
        if self.c2 <= 0:
            raise InvariantViolation("c2", "scale c^2 must be positive")
        self._split  # noqa: B018
        bad = g.jacobi_violations()
        if bad:
            raise InvariantViolation("jacobi", f"fails on basis triple {bad[0]}")
        for a, X in enumerate(self.h_basis):
            for Y in self.h_basis[a + 1:]:
                if any(self.m_coords(g.bracket(X, Y))):
                    raise InvariantViolation("subalgebra", "[h, h] is not contained in h")
        for X in self.h_basis:
            for Y in self.m_frame:
                if any(self.split(g.bracket(X, Y))[0]):
                    raise InvariantViolation("reductive", "[h, m] is not contained in m")
                if g.killing(X, Y):
                    raise InvariantViolation("orthogonal", "h and m are not Killing-orthogonal")
        for a, X in enumerate(self.m_frame):
            for b, Y in enumerate(self.m_frame[a:], start=a):
                want = 1 if a == b else 0
                if self.metric(X, Y) != want:
                    raise InvariantViolation(
                        "orthonormal", f"-c^2 B(e{a + 1}, e{b + 1}) = {self.metric(X, Y)}, expected {want}"
                    )
        for f in self.factors:
            for X in f.ideal:
                for j in range(g.dim):
                    if not _in_span(g.bracket(g.basis_vector(j), X), f.ideal):
                        raise InvariantViolation("ideal", f"{f.label} is not an ideal of g")
        return self

    def isotropy_matrix(self, X):
        """Matrix M of ad_X on m in the frame: ad_X e_b = sum_c M[c][b] e_c (checked skew)."""
        cols = [self.m_coords(self.g.bracket(X, e)) for e in self.m_frame]
        M = [[cols[b][c] for b in range(7)] for c in range(7)]
        for a in range(7):
            for b in range(a, 7):
                if M[a][b] != -M[b][a]:
                    raise NotSkew("ad_X restricted to m is not skew in the frame")
        return M

    @cached_property
    def isotropy_matrices(self):
        return [self.isotropy_matrix(X) for X in self.h_basis]

    def frame_vector(self, m_coords):
        """g-vector sum_a x_a e_a from frame coordinates."""
        return combine(m_coords, self.m_frame, self.dim)


def _in_span(v, vectors):
    if not any(v):
        return True
    try:
        SpanCoordinates(vectors).coords(v)
    except ValueError:
        return False
    return True


def isotropy_action(space, X, w):
    """ad_X (X in h) acting on a form w on m by the derivation action."""
    if any(space.split(X)[1]):
        raise ValueError("X is not in h")
    return endomorphism_action(space.isotropy_matrix(X), w)


def torsion_form(space):
    """The 3-form T(X, Y, Z) = -<[X, Y]_m, Z> in frame coordinates."""
    g = space.g
    T = [[space.m_coords(g.bracket(X, Y)) for Y in space.m_frame] for X in space.m_frame]
    terms = {}
    for a in range(7):
        for b in range(7):
            for c in range(7):
                v = -T[a][b][c]
                # total antisymmetry: T(a,b,c) = -T(b,a,c) = -T(a,c,b)
                if v != T[b][a][c] or v != T[a][c][b]:
                    raise NotSkew(f"<[e{a + 1}, e{b + 1}]_m, e{c + 1}> is not totally antisymmetric")
                if a < b < c and v:
                    terms[(a + 1, b + 1, c + 1)] = v
    return KForm(7, 3, terms)


@dataclass(frozen=True)
class NearlyParallelData:
    tau0: FieldElem
    sigma_o: KForm
    scal: FieldElem
    torsion: KForm
    orientation: int

    @cached_property
    def frame(self):
        return g2_frame(self.sigma_o, self.orientation)

    @property
    def c(self):
        """The constant (5/6) tau0 of the reduced first-order equation."""
        return self.tau0 * mpq(5, 6)


def nearly_parallel_data(space):
    """tau0 < 0 and sigma_o = -(6 / tau0) T checked against |sigma_o|^2 = 7, the induced metric and scal = 21 tau0^2 / 8."""
    T = torsion_form(space)
    if T.is_zero():
        raise NotNearlyParallel("torsion vanishes")
    c2 = space.c2
    tau0 = -sqrt_rational(mpq(6, 5) / c2)
    sigma_o = T * (-6 / tau0)
    if inner(sigma_o, sigma_o) != 7:
        raise NotNearlyParallel(f"|sigma_o|^2 = {inner(sigma_o, sigma_o)}, expected 7")
    if not induces_metric(sigma_o, space.orientation):
        raise NotNearlyParallel("sigma_o does not induce the frame metric and orientation")
    scal = fe(mpq(63, 20) / c2)
    # scalar curvature from the torsion, computed in the c = 1 normalization
    t2 = inner(T, T) * c2
    if (t2 * mpq(-3, 2) + mpq(7, 2)) / c2 != scal:
        raise NotNearlyParallel("scalar curvature cross-check failed")
    if scal != tau0 * tau0 * mpq(21, 8):
        raise NotNearlyParallel("scal != 21 tau0^2 / 8")
    return NearlyParallelData(tau0, sigma_o, scal, T, space.orientation)


# --- space files --------------------------------------------------------------------


def space_to_dict(space):
    sc = []
    for (i, j), row in sorted(space.g.brackets.items()):
        for k in sorted(row):
            sc.append([i + 1, j + 1, k + 1, str(row[k])])
    out = {
        "name": space.name,
        "dim": space.dim,
        "structure_constants": sc,
        "h_basis": [[str(x) for x in v] for v in space.h_basis],
        "m_frame": [[str(x) for x in v] for v in space.m_frame],
        "c2": format_rational(space.c2),
        "orientation": space.orientation,
    }
    if space.factors:
        out["group"] = [
            {
                "family": f.family,
                "rank": f.rank,
                "label": f.label,
                "ideal": [[str(x) for x in v] for v in f.ideal],
            }
            for f in space.factors
        ]
    return out


def space_from_dict(d):
    try:
        dim = int(d["dim"])
        brackets = {}
        for entry in d["structure_constants"]:
            i, j, k, v = entry
            key = (int(i) - 1, int(j) - 1)
            row = brackets.setdefault(key, {})
            row[int(k) - 1] = row.get(int(k) - 1, ZERO) + parse_field(v)
        g = LieAlgebra(dim, brackets)
        factors = []
        for f in d.get("group", []):
            if f["family"] not in ("Sp", "SU"):
                raise ParseError(f"unknown group family {f['family']!r}")
            factors.append(
                GroupFactor(
                    f["family"], int(f["rank"]), str(f["label"]), [tuple(parse_field(x) for x in v) for v in f["ideal"]]
                )
            )
        space = ReductiveSpace(
            name=str(d["name"]),
            g=g,
            h_basis=[[parse_field(x) for x in v] for v in d["h_basis"]],
            m_frame=[[parse_field(x) for x in v] for v in d["m_frame"]],
            c2=rational(str(d["c2"])),
            orientation=int(d.get("orientation", 1)),
            factors=factors,
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (ParseError, InvariantViolation)):
            raise
        raise ParseError(f"malformed space description: {exc}") from exc
    return space.validate()


def dumps_space(space):
    return json.dumps(space_to_dict(space), indent=1, sort_keys=True) + "\n"


def load_space(path):
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    return space_from_dict(data)


def save_space(space, path):
    Path(path).write_text(dumps_space(space))


_CACHE = {}


def builtin(name):
    """One of the shipped spaces: "so5-so3", "squashed-s7", "n11"."""
    if name not in BUILTINS:
        raise ValueError(f"unknown built-in space {name!r}; choose from {', '.join(BUILTINS)}")
    if name not in _CACHE:
        text = resources.files("g2def").joinpath("data", f"{name}.json").read_text()
        _CACHE[name] = space_from_dict(json.loads(text))
    return _CACHE[name]


def resolve_space(selector):
    """A built-in name or a path to a space file."""
    if selector in BUILTINS:
        return builtin(selector)
    return load_space(selector)
