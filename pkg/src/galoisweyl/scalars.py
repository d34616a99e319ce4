"""Exact coefficient field: cyclotomic rationals with formal parameters.

``ScalarField(m, params)`` is the field ``Q(zeta_m)(params)`` with the
parameters algebraically independent.  Elements of ``Q(zeta_m)`` are kept in
the power basis ``1, zeta, ..., zeta^(phi(m)-1)`` modulo the ``m``-th
cyclotomic polynomial; when ``phi(m) == 1`` a plain ``Fraction`` is used.

>>> F = ScalarField(4)
>>> F.zeta() * F.zeta()
Scalar(-1)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd as igcd

from . import polys

__all__ = [
    "cyclotomic_polynomial", "CycNumber", "ScalarField", "Scalar",
    "FieldMismatchError", "root_of_unity",
]


class FieldMismatchError(ValueError):
    """Operands live in different scalar fields."""


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m):
    """Integer coefficients (low degree first) of the ``m``-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _exact_divide(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_divide(num, den):
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1] // den[-1]
        q[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    assert not any(num), "cyclotomic division left a remainder"
    return q


class CycNumber:
    """Element of ``Q(zeta_m)`` with ``phi(m) > 1``."""

    __slots__ = ("m", "coords", "_hash")

    def __init__(self, m, coords):
        self.m = m
        self.coords = tuple(coords)
        self._hash = None

    @staticmethod
    def make(m, coords):
        phi = len(cyclotomic_polynomial(m)) - 1
        coords = _reduce(m, [Fraction(c) for c in coords])
        coords = coords + [Fraction(0)] * (phi - len(coords))
        if phi == 1:
            return coords[0]
        return CycNumber(m, coords)

    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other.m != self.m:
                raise FieldMismatchError(f"Q(zeta_{self.m}) vs Q(zeta_{other.m})")
            return other.coords
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),) + (Fraction(0),) * (len(self.coords) - 1)
        return None

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coords == tuple(o)

    def __hash__(self):
        if self._hash is None:
            if any(self.coords[1:]):
                self._hash = hash((self.m, self.coords))
            else:
                self._hash = hash(self.coords[0])
        return self._hash

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNumber(self.m, [a + b for a, b in zip(self.coords, o)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.m, [-a for a in self.coords])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNumber(self.m, [a - b for a, b in zip(self.coords, o)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.m, [a * other for a in self.coords])
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = [Fraction(0)] * (2 * len(o) - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(o):
                    if b:
                        prod[i + j] += a * b
        red = _reduce(self.m, prod)
        return CycNumber(self.m, red + [Fraction(0)] * (len(self.coords) - len(red)))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta)")
        phi = cyclotomic_polynomial(self.m)
        inv = _poly_inverse_mod(list(self.coords), [Fraction(c) for c in phi])
        return CycNumber(self.m, inv + [Fraction(0)] * (len(self.coords) - len(inv)))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return CycNumber(self.m, [a / other for a in self.coords])
        if isinstance(other, CycNumber):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __repr__(self):
        return f"CycNumber({self.m}, {[str(c) for c in self.coords]})"

    def rational(self):
        """The value as a ``Fraction`` if it lies in ``Q``, else ``None``."""
        if any(self.coords[1:]):
            return None
        return self.coords[0]


def _reduce(m, coeffs):
    phi = cyclotomic_polynomial(m)
    d = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, d - 1, -1):
        f = c[i]
        if f:
            # phi is monic
            for j in range(d):
                c[i - d + j] -= f * phi[j]
            c[i] = 0
    c = c[:d] if len(c) > d else c
    return c


def _poly_strip(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while len(a) >= len(b) and a:
        f = a[-1] / b[-1]
        off = len(a) - len(b)
        q[off] = f
        for j, c in enumerate(b):
            a[off + j] -= f * c
        a.pop()
        _poly_strip(a)
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _poly_strip([Fraction(x) for x in out])


def _poly_inverse_mod(a, mod):
    # extended Euclid: find s with s*a = 1 mod `mod`
    r0, r1 = list(mod), _poly_strip(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScalarField:
    """The field ``Q(zeta_m)(p_1, ..., p_k)``."""

    cyclotomic_order: int = 1
    parameters: tuple = ()

    def __post_init__(self):
        if self.cyclotomic_order < 1:
            raise ValueError("cyclotomic_order must be >= 1")
        params = tuple(self.parameters)
        if len(set(params)) != len(params):
            raise ValueError(f"duplicate parameter names in {params}")
        object.__setattr__(self, "parameters", params)

    @property
    def nparams(self):
        return len(self.parameters)

    @cached_property
    def degree(self):
        return len(cyclotomic_polynomial(self.cyclotomic_order)) - 1

    @cached_property
    def _unit(self):
        return self.base(1)

    @cached_property
    def _zero_key(self):
        return (0,) * len(self.parameters)

    def base(self, value):
        """Coerce an int/Fraction into the coefficient type of ``Q(zeta_m)``."""
        if isinstance(value, CycNumber):
            if value.m != self.cyclotomic_order:
                raise FieldMismatchError("cyclotomic order mismatch")
            return value
        if self.degree == 1:
            return Fraction(value)
        return CycNumber.make(self.cyclotomic_order, [value])

    def __call__(self, value=0):
        if isinstance(value, Scalar):
            if value.field != self:
                return value.coerce(self)
            return value
        c = self.base(value)
        return Scalar(self, polys.constant(c, self.nparams), self._one_poly())

    def _one_poly(self):
        return {self._zero_key: self._unit}

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def zeta(self, k=1):
        """``zeta_m ** k`` in canonical form."""
        m = self.cyclotomic_order
        k %= m
        if m <= 2:
            return self(-1 if (m == 2 and k == 1) else 1)
        coords = [0] * (k + 1)
        coords[k] = 1
        c = CycNumber.make(m, coords)
        return Scalar(self, polys.constant(c, self.nparams), self._one_poly())

    def param(self, name):
        try:
            i = self.parameters.index(name)
        except ValueError:
            raise KeyError(f"unknown parameter {name!r}") from None
        e = [0] * self.nparams
        e[i] = 1
        return Scalar(self, {tuple(e): self.base(1)}, self._one_poly())

    def join(self, other):
        """Smallest field containing both (lcm of orders, union of parameters)."""
        m1, m2 = self.cyclotomic_order, other.cyclotomic_order
        m = m1 * m2 // igcd(m1, m2)
        params = list(self.parameters)
        params += [p for p in other.parameters if p not in params]
        return ScalarField(m, tuple(params))

    def __str__(self):
        base = "Q" if self.cyclotomic_order <= 2 else f"Q(zeta_{self.cyclotomic_order})"
        if self.parameters:
            base += "(" + ",".join(self.parameters) + ")"
        return base


def root_of_unity(field, k=1):
    return field.zeta(k)


class Scalar:
    """Element of a :class:`ScalarField`: reduced fraction of parameter polynomials."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field, num, den):
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    # -- construction helpers -------------------------------------------
    @classmethod
    def _make(cls, field, num, den):
        if not num:
            return cls(field, {}, field._one_poly())
        k = field.nparams
        if len(den) == 1 and not any(next(iter(den))):
            c = next(iter(den.values()))
            if c != 1:
                num = polys.scale(num, 1 / c)
            return cls(field, num, field._one_poly())
        g = polys.gcd(num, den, k)
        if len(g) > 1 or any(next(iter(g))):
            num = polys.divexact(num, g)
            den = polys.divexact(den, g)
        _, lc = polys.leading(den)
        if lc != 1:
            inv = 1 / lc
            num = polys.scale(num, inv)
            den = polys.scale(den, inv)
        return cls(field, num, den)

    def _check(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction, CycNumber)):
            return self.field(other)
        return None

    def is_polynomial(self):
        return len(self.den) == 1 and not any(next(iter(self.den)))

    # -- arithmetic -------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        o = self._check(other) if not isinstance(other, Scalar) else other
        if o is None:
            return NotImplemented
        if o.field != self.field:
            return False
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            if self.is_polynomial() and len(self.num) <= 1 and not any(next(iter(self.num), ())):
                c = next(iter(self.num.values()), 0)
                self._hash = hash(c)
            else:
                self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        F = self.field
        if F.nparams == 0:
            return Scalar._const(F, self._c() + o._c())
        if self.is_polynomial() and o.is_polynomial():
            return Scalar(F, polys.add(self.num, o.num), self.den)
        if self.den == o.den:
            return Scalar._make(F, polys.add(self.num, o.num), self.den)
        num = polys.add(polys.mul(self.num, o.den), polys.mul(o.num, self.den))
        return Scalar._make(F, num, polys.mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, polys.neg(self.num), self.den)

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        F = self.field
        if F.nparams == 0:
            return Scalar._const(F, self._c() * o._c())
        if self.is_polynomial() and o.is_polynomial():
            return Scalar(F, polys.mul(self.num, o.num), self.den)
        return Scalar._make(F, polys.mul(self.num, o.num), polys.mul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        if self.field.nparams == 0:
            c = self._c()
            return Scalar._const(self.field, 1 / c)
        return Scalar._make(self.field, self.den, self.num)

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- helpers ----------------------------------------------------------
    def _c(self):
        return self.num.get((), 0) if self.num else self.field.base(0)

    @staticmethod
    def _const(F, c):
        if not c:
            return Scalar(F, {}, F._one_poly())
        return Scalar(F, {(): c}, F._one_poly())

    def rational(self):
        """The value as a ``Fraction`` when it is a rational constant, else ``None``."""
        if not self.num:
            return Fraction(0)
        if not self.is_polynomial() or len(self.num) != 1:
            return None
        (e, c), = self.num.items()
        if any(e):
            return None
        if isinstance(c, CycNumber):
            return c.rational()
        return Fraction(c)

    def is_constant(self):
        """True when the scalar does not involve the parameters."""
        return self.is_polynomial() and all(not any(e) for e in self.num)

    def coerce(self, field):
        """Embed into a larger field (see :meth:`ScalarField.join`)."""
        if field == self.field:
            return self
        src = self.field
        if field.cyclotomic_order % src.cyclotomic_order:
            raise FieldMismatchError(f"cannot embed {src} into {field}")
        if any(p not in field.parameters for p in src.parameters):
            raise FieldMismatchError(f"cannot embed {src} into {field}")
        step = field.cyclotomic_order // src.cyclotomic_order
        idx = [field.parameters.index(p) for p in src.parameters]

        def conv_poly(p):
            out = field.zero
            for e, c in p.items():
                if isinstance(c, CycNumber):
                    val = field.zero
                    for j, cj in enumerate(c.coords):
                        if cj:
                            val = val + field.zeta(j * step) * cj
                else:
                    val = field(c)
                mono = field.one
                for i, x in zip(idx, e):
                    if x:
                        mono = mono * field.param(field.parameters[i]) ** x
                out = out + val * mono
            return out

        return conv_poly(self.num) / conv_poly(self.den)

    def __repr__(self):
        from .printing import format_scalar
        return f"Scalar({format_scalar(self)})"

    def __str__(self):
        from .printing import format_scalar
        return format_scalar(self)
