"""Sparse exterior algebra on R^n with an orthonormal frame e_1..e_n.

Multi-indices are strictly increasing tuples of 1-based indices. Monomials are
evaluated by the determinant convention, e^{i1..ik}(e_{j1},..,e_{jk}) =
det(delta_{ia, jb}), which fixes every contraction sign.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations

from .errors import DimensionMismatch, ParseError
from .field import ONE, ZERO, FieldElem, fe, format_field, parse_field


@lru_cache(maxsize=None)
def sort_sign(seq):
    """(sign, sorted tuple) for a sequence of indices; sign 0 on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, ()
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(seq)


@lru_cache(maxsize=None)
def basis_indices(n, k):
    """Lexicographically ordered k-subsets of 1..n."""
    return tuple(combinations(range(1, n + 1), k))


@lru_cache(maxsize=None)
def index_position(n, k):
    return {I: pos for pos, I in enumerate(basis_indices(n, k))}


class Vector:
    """n coordinates in the orthonormal frame; also read as a 1-form."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(fe(x) for x in coords)

    @classmethod
    def basis(cls, n, i):
        """The frame vector e_i (1-based)."""
        return cls([ONE if j == i else ZERO for j in range(1, n + 1)])

    @classmethod
    def zero(cls, n):
        return cls([ZERO] * n)

    @property
    def n(self):
        return len(self.coords)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other):
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch(f"vectors of length {len(self)} and {len(other)}")

    def __add__(self, other):
        self._check(other)
        return Vector([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._check(other)
        return Vector([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return Vector([-a for a in self.coords])

    def __mul__(self, c):
        c = fe(c)
        return Vector([c * a for a in self.coords])

    __rmul__ = __mul__

    def dot(self, other):
        self._check(other)
        acc = ZERO
        for a, b in zip(self.coords, other.coords):
            if a and b:
                acc = acc + a * b
        return acc

    def __eq__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def as_form(self):
        return KForm(len(self.coords), 1, {(i + 1,): c for i, c in enumerate(self.coords) if c})

    def __repr__(self):
        return f"Vector([{', '.join(str(c) for c in self.coords)}])"


class KForm:
    """Sparse k-form on R^n: ``terms`` maps multi-index -> nonzero FieldElem."""

    __slots__ = ("n", "k", "terms")

    def __init__(self, n, k, terms=None):
        self.n = n
        self.k = k
        clean = {}
        for I, c in (terms or {}).items():
            I = tuple(I)
            if len(I) != k or any(not 1 <= i <= n for i in I) or any(
                I[a] >= I[a + 1] for a in range(k - 1)
            ):
                raise ValueError(f"bad multi-index {I} for a {k}-form on R^{n}")
            c = fe(c)
            if c:
                clean[I] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, k, terms):
        obj = object.__new__(cls)
        obj.n, obj.k, obj.terms = n, k, terms
        return obj

    @classmethod
    def monomial(cls, n, indices, coeff=1):
        """Coefficient times e^{indices}; indices may be unsorted (sign applied)."""
        sign, I = sort_sign(tuple(indices))
        if sign == 0:
            return cls(n, len(indices))
        return cls(n, len(I), {I: fe(coeff) * sign})

    @classmethod
    def zero(cls, n, k):
        return cls._raw(n, k, {})

    @classmethod
    def from_vector(cls, coords, n, k):
        """Inverse of ``to_vector``: coordinates in the lexicographic monomial basis."""
        return cls(n, k, {I: c for I, c in zip(basis_indices(n, k), coords)})

    def to_vector(self):
        return tuple(self.terms.get(I, ZERO) for I in basis_indices(self.n, self.k))

    def coeff(self, indices):
        sign, I = sort_sign(tuple(indices))
        if sign == 0:
            return ZERO
        return self.terms.get(I, ZERO) * sign

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other):
        if not isinstance(other, KForm):
            raise TypeError("expected a KForm")
        if self.n != other.n or self.k != other.k:
            raise DimensionMismatch(f"({self.n},{self.k})-form vs ({other.n},{other.k})-form")

    def __add__(self, other):
        self._check(other)
        d = dict(self.terms)
        for I, c in other.terms.items():
            v = d.get(I)
            v = c if v is None else v + c
            if v:
                d[I] = v
            else:
                d.pop(I, None)
        return KForm._raw(self.n, self.k, d)

    def __neg__(self):
        return KForm._raw(self.n, self.k, {I: -c for I, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        c = fe(c)
        if not c:
            return KForm.zero(self.n, self.k)
        return KForm._raw(self.n, self.k, {I: c * v for I, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.k, frozenset(self.terms.items())))

    def __xor__(self, other):
        return wedge(self, other)

    def __str__(self):
        return format_form(self)

    def __repr__(self):
        return f"KForm({self.n}, {self.k}, '{self}')"


def e(n, *indices):
    """The monomial e^{i1...ik} on R^n."""
    return KForm.monomial(n, indices)


def wedge(a, b):
    if a.n != b.n:
        raise DimensionMismatch(f"wedge of forms on R^{a.n} and R^{b.n}")
    n, k = a.n, a.k + b.k
    if k > n:
        return KForm.zero(n, k)
    d = {}
    for I, x in a.terms.items():
        for J, y in b.terms.items():
            sign, K = sort_sign(I + J)
            if not sign:
                continue
            v = x * y
            if sign < 0:
                v = -v
            old = d.get(K)
            v = v if old is None else old + v
            if v:
                d[K] = v
            else:
                d.pop(K, None)
    return KForm._raw(n, k, d)


def wedge_all(*forms):
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


def contract(X, w):
    """Interior product X _| w, with (X _| w)(Y,...) = w(X,Y,...)."""
    X = X if isinstance(X, Vector) else Vector(X)
    if len(X) != w.n:
        raise DimensionMismatch(f"vector of length {len(X)} into a form on R^{w.n}")
    if w.k == 0:
        raise DimensionMismatch("contraction into a 0-form")
    d = {}
    for I, c in w.terms.items():
        for pos, i in enumerate(I):
            x = X.coords[i - 1]
            if not x:
                continue
            J = I[:pos] + I[pos + 1:]
            v = c * x
            if pos % 2:
                v = -v
            old = d.get(J)
            v = v if old is None else old + v
            if v:
                d[J] = v
            else:
                d.pop(J, None)
    return KForm._raw(w.n, w.k - 1, d)


def contract_form(v, w):
    """Contraction of a 1-form (read as a vector through the metric) into w."""
    if v.k != 1:
        raise DimensionMismatch("only 1-forms can be contracted")
    return contract(form_to_vector(v), w)


def form_to_vector(v):
    return Vector([v.terms.get((i,), ZERO) for i in range(1, v.n + 1)])


@lru_cache(maxsize=None)
def _hodge_monomial(n, I):
    Ic = tuple(i for i in range(1, n + 1) if i not in I)
    sign, _ = sort_sign(I + Ic)
    return sign, Ic


def hodge(w, orientation=1):
    """Hodge star with e^{1..n} (times orientation) as volume form."""
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    d = {}
    for I, c in w.terms.items():
        sign, Ic = _hodge_monomial(w.n, I)
        d[Ic] = c if sign * orientation > 0 else -c
    return KForm._raw(w.n, w.n - w.k, d)


def inner(a, b):
    """Inner product in which the monomials e^I are orthonormal (bilinear)."""
    if a.n != b.n or a.k != b.k:
        raise DimensionMismatch(f"inner of ({a.n},{a.k}) and ({b.n},{b.k}) forms")
    acc = ZERO
    small, big = (a, b) if len(a.terms) <= len(b.terms) else (b, a)
    for I, c in small.terms.items():
        v = big.terms.get(I)
        if v is not None:
            acc = acc + c * v
    return acc


def norm2(a):
    return inner(a, a)


def volume(n, orientation=1):
    return KForm.monomial(n, range(1, n + 1), orientation)


def top_coefficient(w, orientation=1):
    """The scalar f with w = f * vol (vol = orientation * e^{1..n})."""
    if w.k != w.n:
        raise DimensionMismatch("not a top-degree form")
    return w.terms.get(tuple(range(1, w.n + 1)), ZERO) * orientation


class FormValuedCovector:
    """Element sum_i e^i (x) F_i of T* (x) Lambda^s; ``components[i-1] = F_i``."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        if components:
            n, s = components[0].n, components[0].k
            if len(components) != n or any(c.n != n or c.k != s for c in components):
                raise DimensionMismatch("components must be n forms of a common degree")
        self.components = components

    @property
    def n(self):
        return len(self.components)

    @property
    def degree(self):
        return self.components[0].k

    def __add__(self, other):
        return FormValuedCovector([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        return FormValuedCovector([a - b for a, b in zip(self.components, other.components)])

    def __mul__(self, c):
        return FormValuedCovector([a * c for a in self.components])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FormValuedCovector):
            return NotImplemented
        return self.components == other.components

    def is_zero(self):
        return all(c.is_zero() for c in self.components)

    def to_vector(self):
        out = []
        for c in self.components:
            out.extend(c.to_vector())
        return tuple(out)

    @classmethod
    def from_vector(cls, coords, n, s):
        size = len(basis_indices(n, s))
        return cls(
            [KForm.from_vector(coords[i * size:(i + 1) * size], n, s) for i in range(n)]
        )


def eps(F):
    """The wedging map sum_i e^i ^ F_i."""
    n, s = F.n, F.degree
    out = KForm.zero(n, s + 1)
    for i, Fi in enumerate(F.components, start=1):
        if Fi:
            out = out + wedge(e(n, i), Fi)
    return out


def endomorphism_action(A, w):
    """Derivation action of an endomorphism A on a form.

    ``A[r][c]`` is the matrix with A e_c = sum_r A[r][c] e_r and the action is
    (A_* w)(X_1,..,X_p) = -sum_j w(X_1,..,A X_j,..,X_p).
    """
    n = w.n
    # A_* e^i = -sum_k A[i][k] e^k
    rows = [[(k + 1, -A[i][k]) for k in range(n) if A[i][k]] for i in range(n)]
    d = {}
    for I, c in w.terms.items():
        for pos, i in enumerate(I):
            for k, a in rows[i - 1]:
                if k != i and k in I:
                    continue
                J = I[:pos] + (k,) + I[pos + 1:]
                sign, K = sort_sign(J)
                if not sign:
                    continue
                v = c * a
                if sign < 0:
                    v = -v
                old = d.get(K)
                v = v if old is None else old + v
                if v:
                    d[K] = v
                else:
                    d.pop(K, None)
    return KForm._raw(n, w.k, d)


def form_matrix(op, n, k_in, k_out=None):
    """Matrix (rows: output monomials, cols: input monomials) of a linear map on forms."""
    from .linalg import FieldMatrix

    k_out = k_in if k_out is None else k_out
    cols = [op(KForm._raw(n, k_in, {I: ONE})).to_vector() for I in basis_indices(n, k_in)]
    return FieldMatrix.from_columns(cols, len(basis_indices(n, k_out)))


# --- text encoding -----------------------------------------------------------


def format_form(w):
    if not w.terms:
        return "0"
    parts = []
    sep = "" if w.n <= 9 else ","
    for I in sorted(w.terms):
        c = w.terms[I]
        cs = format_field(c)
        if " + " in cs:
            cs = f"({cs})"
        idx = sep.join(str(i) for i in I)
        if w.n > 9:
            idx = "{" + idx + "}"
        parts.append(f"{cs}*e{idx}")
    return " + ".join(parts)


_FORM_TERM = re.compile(r"^(?:\((?P<paren>[^()]*)\)|(?P<plain>[^()]*?))\*?e(?P<idx>\{[\d,]*\}|\d+)$")


def parse_form(text, n, k):
    """Parse ``<FieldElem>*e{i1..ik}`` terms joined by ``+``."""
    s = re.sub(r"\s+", "", text)
    if s in ("", "0"):
        return KForm.zero(n, k)
    # split on '+' outside parentheses
    terms, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            terms.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    terms.append("".join(cur))
    out = KForm.zero(n, k)
    for t in terms:
        m = _FORM_TERM.match(t)
        if not m:
            raise ParseError(f"bad form term {t!r}")
        coeff_text = m.group("paren") if m.group("paren") is not None else m.group("plain")
        if coeff_text in ("", "+"):
            coeff = ONE
        elif coeff_text == "-":
            coeff = -ONE
        else:
            coeff = parse_field(coeff_text)
        idx = m.group("idx")
        if idx.startswith("{"):
            inner_idx = idx[1:-1]
            indices = tuple(int(x) for x in inner_idx.split(",")) if "," in inner_idx else tuple(
                int(ch) for ch in inner_idx
            )
        else:
            indices = tuple(int(ch) for ch in idx)
        if len(indices) != k:
            raise ParseError(f"term {t!r} is not of degree {k}")
        if any(not 1 <= i <= n for i in indices):
            raise ParseError(f"term {t!r} has an index outside 1..{n}")
        out = out + KForm.monomial(n, indices, coeff)
    return out


__all__ = [
    "Vector",
    "KForm",
    "FormValuedCovector",
    "FieldElem",
    "e",
    "wedge",
    "wedge_all",
    "contract",
    "hodge",
    "inner",
    "norm2",
    "eps",
    "volume",
    "top_coefficient",
    "endomorphism_action",
    "form_matrix",
    "basis_indices",
    "index_position",
    "sort_sign",
    "parse_form",
    "format_form",
]
