"""Exact arithmetic in the multiquadratic field K = Q(i, sqrt2, sqrt3, sqrt5).

An element is stored sparsely as ``{mask: mpq}`` where the 4-bit mask picks a
product of generators: bit 0 = i, bit 1 = sqrt2, bit 2 = sqrt3, bit 3 = sqrt5.
The 16 monomials form a Q-basis of K, so the representation is canonical and
equality is coefficient-wise.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

import gmpy2
from gmpy2 import mpq

from .errors import DivisionByZero, NotInField, ParseError

Rational = mpq

I_BIT, SQRT2_BIT, SQRT3_BIT, SQRT5_BIT = 1, 2, 4, 8
_GENERATORS = ((I_BIT, -1), (SQRT2_BIT, 2), (SQRT3_BIT, 3), (SQRT5_BIT, 5))


def _monomial_product(m1, m2):
    factor = 1
    for bit, square in _GENERATORS:
        if m1 & bit and m2 & bit:
            factor *= square
    return m1 ^ m2, factor


_MUL = [[_monomial_product(a, b) for b in range(16)] for a in range(16)]

# basis order used by coeffs() and the text encoding:
# {1, r2, r3, r5, r6, r10, r15, r30} x {1, i}
_REAL_ORDER = (0, 2, 4, 8, 6, 10, 12, 14)
BASIS_ORDER = _REAL_ORDER + tuple(m | I_BIT for m in _REAL_ORDER)
_RADICAND = {0: 1, 2: 2, 4: 3, 8: 5, 6: 6, 10: 10, 12: 15, 14: 30}
_MASK_OF_RADICAND = {v: k for k, v in _RADICAND.items()}


def _to_mpq(x):
    if isinstance(x, int):
        return mpq(x)
    if type(x) is type(mpq()):
        return x
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, _RationalABC):
        return mpq(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


class FieldElem:
    """Immutable element of Q(i, sqrt2, sqrt3, sqrt5)."""

    __slots__ = ("_c", "_hash")

    def __new__(cls, value=0):
        if isinstance(value, FieldElem):
            return value
        if isinstance(value, str):
            return parse_field(value)
        q = _to_mpq(value)
        return _make({0: q} if q else {})

    # --- construction helpers -------------------------------------------------
    @classmethod
    def from_coeffs(cls, coeffs):
        """Build from 16 rationals in ``BASIS_ORDER``."""
        if len(coeffs) != 16:
            raise ValueError("expected 16 coefficients")
        d = {}
        for m, c in zip(BASIS_ORDER, coeffs):
            c = _to_mpq(c)
            if c:
                d[m] = c
        return _make(d)

    @classmethod
    def monomial(cls, mask, coeff=1):
        c = _to_mpq(coeff)
        return _make({mask: c} if c else {})

    # --- inspection -----------------------------------------------------------
    def coeffs(self):
        return tuple(self._c.get(m, mpq(0)) for m in BASIS_ORDER)

    def terms(self):
        return dict(self._c)

    def is_zero(self):
        return not self._c

    def is_rational(self):
        return not self._c or (len(self._c) == 1 and 0 in self._c)

    def is_real(self):
        return all(not m & I_BIT for m in self._c)

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._c.get(0, mpq(0))

    # --- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other._c:
            return self
        if not self._c:
            return other
        d = dict(self._c)
        for m, c in other._c.items():
            v = d.get(m)
            if v is None:
                d[m] = c
            else:
                v = v + c
                if v:
                    d[m] = v
                else:
                    del d[m]
        return _make(d)

    __radd__ = __add__

    def __neg__(self):
        return _make({m: -c for m, c in self._c.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, FieldElem):
            a, b = self._c, other._c
        else:
            try:
                q = _to_mpq(other)
            except TypeError:
                return NotImplemented
            if not q:
                return ZERO
            return _make({m: c * q for m, c in self._c.items()})
        if not a or not b:
            return ZERO
        if len(b) == 1 and 0 in b:
            q = b[0]
            return _make({m: c * q for m, c in a.items()})
        if len(a) == 1 and 0 in a:
            q = a[0]
            return _make({m: c * q for m, c in b.items()})
        d = {}
        for m1, c1 in a.items():
            row = _MUL[m1]
            for m2, c2 in b.items():
                m, f = row[m2]
                v = c1 * c2 * f
                if m in d:
                    d[m] += v
                else:
                    d[m] = v
        return _make({m: c for m, c in d.items() if c})

    __rmul__ = __mul__

    def conj(self, bit):
        """Galois conjugate flipping the sign of one generator."""
        return _make({m: (-c if m & bit else c) for m, c in self._c.items()})

    def conjugate(self):
        """Complex conjugation (i -> -i)."""
        return self.conj(I_BIT)

    def inv(self):
        if not self._c:
            raise DivisionByZero("inverse of zero field element")
        num = ONE
        x = self
        for bit, _ in _GENERATORS:
            if any(m & bit for m in x._c):
                c = x.conj(bit)
                num = num * c
                x = x * c
        q = x.rational()
        return num * (1 / q)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_rational():
            q = other.rational()
            if not q:
                raise DivisionByZero("division by zero")
            return self * (1 / q)
        return self * other.inv()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # --- comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self._c == other._c
        try:
            q = _to_mpq(other)
        except TypeError:
            return NotImplemented
        if not q:
            return not self._c
        return len(self._c) == 1 and self._c.get(0) == q

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        h = self._hash
        if h is None:
            if self.is_rational():
                h = hash(self._c.get(0, mpq(0)))
            else:
                h = hash(frozenset(self._c.items()))
            self._hash = h
        return h

    def __bool__(self):
        return bool(self._c)

    def __reduce__(self):
        return (parse_field, (str(self),))

    # --- output ---------------------------------------------------------------
    def __str__(self):
        return format_field(self)

    def __repr__(self):
        return f"FieldElem('{self}')"

    def to_complex(self):
        """Approximate complex value (for display only)."""
        z = 0j
        for m, c in self._c.items():
            v = float(c) * math.sqrt(_RADICAND[m & ~I_BIT])
            z += complex(0, v) if m & I_BIT else v
        return z


def _make(d):
    obj = object.__new__(FieldElem)
    obj._c = d
    obj._hash = None
    return obj


def _coerce(x):
    if isinstance(x, FieldElem):
        return x
    try:
        q = _to_mpq(x)
    except TypeError:
        return None
    return _make({0: q} if q else {})


ZERO = _make({})
ONE = _make({0: mpq(1)})
I = _make({I_BIT: mpq(1)})
SQRT2 = _make({SQRT2_BIT: mpq(1)})
SQRT3 = _make({SQRT3_BIT: mpq(1)})
SQRT5 = _make({SQRT5_BIT: mpq(1)})


def fe(x):
    """Coerce int / rational / string / FieldElem to FieldElem."""
    return FieldElem(x)


def rational(text):
    """Parse ``p`` or ``p/q`` into a reduced rational."""
    try:
        if "/" in text:
            p, q = text.split("/")
            return mpq(int(p), int(q))
        return mpq(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def format_rational(q):
    q = _to_mpq(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sqrt_rational(q):
    """Exact square root of a rational inside K; raises NotInField otherwise."""
    q = _to_mpq(q)
    if q == 0:
        return ZERO
    neg = q < 0
    q = abs(q)
    num, den = int(q.numerator), int(q.denominator)
    m = num * den
    root = 1
    radicand = 1
    for p in (2, 3, 5):
        while m % (p * p) == 0:
            m //= p * p
            root *= p
        if m % p == 0:
            m //= p
            radicand *= p
    r = int(gmpy2.isqrt(m))
    if r * r != m:
        raise NotInField(f"sqrt({format_rational(q)}) is not in Q(i,sqrt2,sqrt3,sqrt5)")
    root *= r
    mask = _MASK_OF_RADICAND[radicand] | (I_BIT if neg else 0)
    return _make({mask: mpq(root, den)})


def format_field(x):
    if not x._c:
        return "0"
    parts = []
    for m in BASIS_ORDER:
        c = x._c.get(m)
        if c is None:
            continue
        s = format_rational(c)
        rad = _RADICAND[m & ~I_BIT]
        if rad != 1:
            s += f"*r{rad}"
        if m & I_BIT:
            s = "i*" + s
        parts.append(s)
    return " + ".join(parts)


_TERM = re.compile(r"^(-)?(?:(i)\*?)?(-?\d+(?:/\d+)?)?(?:\*?r(\d+))?$")


def parse_field(text):
    """Parse the text encoding, e.g. ``-12/5*r5`` or ``1 + i*1/2*r6``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    s = re.sub(r"\s+", "", text)
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ParseError("empty field element")
    s = re.sub(r"(?<=[0-9ri])-", "+-", s)
    total = ZERO
    for term in s.split("+"):
        mt = _TERM.match(term)
        if not term or not mt or not (mt.group(2) or mt.group(3) or mt.group(4)):
            raise ParseError(f"bad field term {term!r} in {text!r}")
        sign, imag, rat, rad = mt.groups()
        q = rational(rat) if rat else mpq(1)
        if sign:
            q = -q
        mask = 0
        if rad:
            if int(rad) not in _MASK_OF_RADICAND:
                raise ParseError(f"unknown radical r{rad} in {text!r}")
            mask = _MASK_OF_RADICAND[int(rad)]
        if imag:
            mask |= I_BIT
        total = total + _make({mask: q} if q else {})
    return total
