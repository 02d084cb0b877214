"""Exact arithmetic in cyclotomic fields Q(zeta_n).

A scalar is a vector of rationals in the power basis 1, z, ..., z^(phi(n)-1)
of Q(zeta_n), kept reduced modulo the n-th cyclotomic polynomial.  Field
conjugation is z -> z^(n-1).  Everything is exact; the sign of a real scalar
is decided by interval refinement of the standard complex embedding, with the
exact zero test run first so the refinement always terminates.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .errors import FieldOrderMismatch, SchemaError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _poly_mul_int(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly_div_monic_int(num, den):
    # exact division of integer polynomials, den monic; remainder must vanish
    num = list(num)
    dd = len(den) - 1
    q = [0] * (len(num) - dd)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dd]
        if c:
            q[i] = c
            for j, y in enumerate(den):
                num[i + j] -= c * y
    assert all(c == 0 for c in num), "non-exact polynomial division"
    return q

_CYCLO_CACHE = {}


def cyclotomic_polynomial(n):
    """Coefficients of Phi_n over the integers, lowest degree first."""
    if n in _CYCLO_CACHE:
        return _CYCLO_CACHE[n]
    if n < 1:
        raise SchemaError("cyclotomic order must be >= 1, got %r" % (n,))
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_div_monic_int(poly, cyclotomic_polynomial(d))
    _CYCLO_CACHE[n] = tuple(poly)
    return _CYCLO_CACHE[n]


_FIELDS = {}


class CycField:
    """The field Q(zeta_n), acting as a factory for its scalars."""

    def __new__(cls, n):
        n = int(n)
        if n in _FIELDS:
            return _FIELDS[n]
        self = object.__new__(cls)
        self._init(n)
        _FIELDS[n] = self
        return self

    def _init(self, n):
        if n < 1:
            raise SchemaError("cyclotomic order must be >= 1, got %r" % (n,))
        self.n = n
        cyclo = cyclotomic_polynomial(n)
        self.phi = len(cyclo) - 1
        self.cyclo = tuple(Fraction(c) for c in cyclo)
        # representations of x^(phi + j) mod Phi_n, enough for products
        # (degree 2*phi - 2) and for all powers z^k, k < n
        top = max(2 * self.phi - 2, n - 1)
        pows = []
        cur = [-c for c in self.cyclo[: self.phi]]  # x^phi
        for _ in range(self.phi, top + 1):
            pows.append(tuple(cur))
            shifted = [_ZERO] + cur[: self.phi - 1]
            lead = cur[self.phi - 1]
            if lead:
                shifted = [s + lead * p for s, p in zip(shifted, pows[0])]
            cur = shifted
        self._pows = pows
        zpows = []
        for k in range(n):
            if k < self.phi:
                zpows.append(tuple(_ONE if i == k else _ZERO for i in range(self.phi)))
            else:
                zpows.append(pows[k - self.phi])
        self._zeta_pows = zpows
        self._conj_rows = tuple(zpows[(n - k) % n] for k in range(self.phi))
        self.zero = CycScalar(self, (_ZERO,) * self.phi)
        self.one = CycScalar(self, (_ONE,) + (_ZERO,) * (self.phi - 1))
        self._embed_cache = None

    def __repr__(self):
        return "CycField(%d)" % self.n

    def __reduce__(self):  # pickling round-trips through the cache
        return (CycField, (self.n,))

    def scalar(self, value):
        """Coerce an int, Fraction, coefficient sequence, or scalar."""
        if isinstance(value, CycScalar):
            if value.field is self:
                return value
            if value.is_rational():
                return self.from_rational(value.coeffs[0])
            raise FieldOrderMismatch(
                "cannot coerce scalar of order %d into Q(zeta_%d)"
                % (value.field.n, self.n)
            )
        if isinstance(value, (int, Fraction)):
            return self.from_rational(Fraction(value))
        coeffs = [Fraction(c) for c in value]
        if len(coeffs) > self.phi:
            coeffs = list(self._reduce(coeffs))
        coeffs += [_ZERO] * (self.phi - len(coeffs))
        return CycScalar(self, tuple(coeffs))

    def from_rational(self, q):
        return CycScalar(self, (Fraction(q),) + (_ZERO,) * (self.phi - 1))

    def zeta(self, k=1):
        """The root of unity zeta_n^k as an exact scalar."""
        return CycScalar(self, self._zeta_pows[k % self.n])

    def _reduce(self, coeffs):
        phi = self.phi
        c = list(coeffs) + [_ZERO] * max(0, phi - len(coeffs))
        for k in range(len(c) - 1, phi - 1, -1):
            ck = c[k]
            if ck:
                for i, r in enumerate(self._pows[k - phi]):
                    if r:
                        c[i] += ck * r
        return tuple(c[:phi])

    def lift(self, scalar):
        """Embed a scalar from Q(zeta_m) for m dividing n via z_m -> z_n^(n/m)."""
        m = scalar.field.n
        if m == self.n:
            return scalar
        if self.n % m:
            raise FieldOrderMismatch(
                "order %d does not divide target order %d" % (m, self.n)
            )
        step = self.n // m
        out = self.zero
        for k, c in enumerate(scalar.coeffs):
            if c:
                out = out + CycScalar(self, self._zeta_pows[(k * step) % self.n]) * c
        return out

    def _embeddings(self):
        if self._embed_cache is None:
            z = cmath.exp(2j * cmath.pi / self.n)
            self._embed_cache = tuple(z ** k for k in range(self.phi))
        return self._embed_cache


class CycScalar:
    """An element of Q(zeta_n); immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    # -- predicates -------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self):
        return not any(self.coeffs[1:])

    def as_fraction(self):
        if not self.is_rational():
            raise ValueError("scalar %r is not rational" % (self,))
        return self.coeffs[0]

    def is_real(self):
        return self.conjugate() == self

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.field is self.field:
                return other
            raise FieldOrderMismatch(
                "mixed field orders %d and %d" % (self.field.n, other.field.n)
            )
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(Fraction(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycScalar(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycScalar(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycScalar(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not any(a) or not any(b):
            return self.field.zero
        if not any(b[1:]):  # rational right factor
            q = b[0]
            return CycScalar(self.field, tuple(c * q for c in a))
        if not any(a[1:]):
            q = a[0]
            return CycScalar(self.field, tuple(c * q for c in b))
        prod = [_ZERO] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycScalar(self.field, self.field._reduce(prod))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        if self.is_rational():
            return self.field.from_rational(1 / self.coeffs[0])
        # extended Euclid: find s with s*self == 1 (mod Phi_n)
        m = list(self.field.cyclo)
        r0, s0 = m, [_ZERO]
        r1, s1 = _trim(list(self.coeffs)), [_ONE]
        while _degree(r1) > 0:
            q, rem = _fpoly_divmod(r0, r1)
            r0, r1 = r1, _trim(rem)
            s0, s1 = s1, _trim(_fpoly_sub(s0, _poly_mul_frac(q, s1)))
        assert r1 and r1 != [_ZERO], "Phi_n not coprime to nonzero element"
        c = r1[0]
        inv = [x / c for x in s1]
        return CycScalar(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self):
        out = [_ZERO] * self.field.phi
        for k, c in enumerate(self.coeffs):
            if c:
                for i, r in enumerate(self.field._conj_rows[k]):
                    if r:
                        out[i] += c * r
        return CycScalar(self.field, tuple(out))

    # -- comparisons and ordering helpers ----------------------------------

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.field.n == other.field.n and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.n, self.coeffs))

    def sort_key(self):
        return tuple((c.numerator, c.denominator) for c in self.coeffs)

    def sign(self):
        """Certified sign (-1, 0, 1) of a real scalar."""
        if not self.is_real():
            raise ValueError("sign of a non-real scalar %r" % (self,))
        if self.is_zero():
            return 0
        if self.is_rational():
            q = self.coeffs[0]
            return 1 if q > 0 else -1
        from mpmath import iv

        n = self.field.n
        prec = 64
        while prec <= 1 << 14:
            old = iv.prec
            try:
                iv.prec = prec
                total = iv.mpf(0)
                for k, c in enumerate(self.coeffs):
                    if c:
                        total += (iv.mpf(c.numerator) / c.denominator) * iv.cos(
                            2 * iv.pi * k / n
                        )
                if total.a > 0:
                    return 1
                if total.b < 0:
                    return -1
            finally:
                iv.prec = old
            prec *= 2
        raise ArithmeticError("sign certification did not converge for %r" % (self,))

    def is_positive(self):
        return self.sign() > 0

    def embed(self):
        """Standard complex embedding z -> exp(2*pi*i/n), as a float."""
        basis = self.field._embeddings()
        return sum(float(c) * b for c, b in zip(self.coeffs, basis) if c)

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "z%d" % self.field.n + ("^%d" % k if k > 1 else "")
                terms.append(mono if c == 1 else "-" + mono if c == -1 else "%s*%s" % (c, mono))
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _degree(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i]:
            return i
    return -1


def _trim(p):
    d = _degree(p)
    return p[: d + 1] if d >= 0 else [_ZERO]


def _fpoly_sub(a, b):
    out = list(a) + [_ZERO] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return out


def _poly_mul_frac(a, b):
    out = [_ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _fpoly_divmod(num, den):
    num = list(num)
    dd = _degree(den)
    lead = den[dd]
    q = [_ZERO] * max(0, len(num) - dd)
    for i in range(len(num) - dd - 1, -1, -1):
        c = num[i + dd] / lead
        if c:
            q[i] = c
            for j in range(dd + 1):
                num[i + j] -= c * den[j]
    return q, num[:dd] if dd > 0 else [_ZERO]
