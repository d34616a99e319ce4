"""Multivariate rational functions over a :class:`ScalarField` and their
substitution automorphisms.

A :class:`VariableContext` names the variables (``t1, t2``, ``H1``, ``c, h``
...) and flags the ones that are invertible in the base *ring*.  All
arithmetic happens in the fraction field; ring membership is a predicate
(:meth:`RationalFunction.in_base_ring`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import polys
from .scalars import CycNumber, FieldMismatchError, Scalar, ScalarField

__all__ = [
    "VariableContext", "RationalFunction", "FieldAutomorphism",
    "ContextMismatchError",
]


class ContextMismatchError(ValueError):
    """Operands belong to different variable contexts."""


@dataclass(frozen=True)
class VariableContext:
    names: tuple
    laurent: tuple = None
    field: ScalarField = field(default_factory=ScalarField)

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        laurent = tuple(self.laurent) if self.laurent is not None else (False,) * len(names)
        if len(laurent) != len(names):
            raise ValueError("laurent flags must match the variable names")
        clash = set(names) & set(self.field.parameters)
        if clash:
            raise ValueError(f"variables {sorted(clash)} clash with scalar parameters")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "laurent", tuple(bool(x) for x in laurent))

    @property
    def nvars(self):
        return len(self.names)

    def index(self, name):
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __call__(self, value=0):
        """Constant rational function."""
        s = self.field(value)
        return RationalFunction(self, polys.constant(s, self.nvars), self._one_poly())

    def var(self, name):
        e = [0] * self.nvars
        e[self.index(name)] = 1
        return RationalFunction(self, {tuple(e): self.field.one}, self._one_poly())

    def gens(self):
        return [self.var(n) for n in self.names]

    def _one_poly(self):
        return {(0,) * self.nvars: self.field.one}

    def from_poly(self, num, den=None):
        return RationalFunction._make(self, num, den if den is not None else self._one_poly())

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def with_field(self, field):
        return VariableContext(self.names, self.laurent, field)

    def __str__(self):
        inner = ", ".join(f"{n}^(+-1)" if l else n for n, l in zip(self.names, self.laurent))
        return f"{self.field}[{inner}]"


class RationalFunction:
    """Reduced fraction ``num/den`` of polynomials with :class:`Scalar` coefficients."""

    __slots__ = ("context", "num", "den", "_hash")

    def __init__(self, context, num, den):
        self.context = context
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _make(cls, ctx, num, den):
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return cls(ctx, {}, ctx._one_poly())
        k = ctx.nvars
        if len(den) == 1:
            (e, c), = den.items()
            if not any(e):
                if c != 1:
                    num = polys.scale(num, 1 / c)
                return cls(ctx, num, ctx._one_poly())
        g = polys.gcd(num, den, k)
        if len(g) > 1 or any(next(iter(g))):
            num = polys.divexact(num, g)
            den = polys.divexact(den, g)
        _, lc = polys.leading(den)
        if lc != 1:
            inv = 1 / lc
            num = polys.scale(num, inv)
            den = polys.scale(den, inv)
        return cls(ctx, num, den)

    def _check(self, other):
        if isinstance(other, RationalFunction):
            if other.context is not self.context and other.context != self.context:
                raise ContextMismatchError(f"{self.context} vs {other.context}")
            return other
        if isinstance(other, (int, Fraction, CycNumber, Scalar)):
            return self.context(other)
        return None

    # -- predicates ---------------------------------------------------------
    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return len(self.den) == 1 and not any(next(iter(self.den)))

    def is_constant(self):
        return self.is_polynomial() and all(not any(e) for e in self.num)

    def constant_value(self):
        """The :class:`Scalar` value of a constant function."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.get((0,) * self.context.nvars, self.context.field.zero)

    def in_base_ring(self):
        """Denominator is a monomial in Laurent-flagged variables."""
        if len(self.den) != 1:
            return False
        (e,) = self.den.keys()
        return all(x == 0 or lf for x, lf in zip(e, self.context.laurent))

    def variables(self):
        used = set()
        for p in (self.num, self.den):
            for e in p:
                used.update(i for i, x in enumerate(e) if x)
        return {self.context.names[i] for i in used}

    # -- arithmetic ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.context == other.context and self.num == other.num and self.den == other.den
        try:
            o = self._check(other)
        except (FieldMismatchError, ValueError):
            return False
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()), frozenset(self.den.items())))
        return self._hash

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        ctx = self.context
        if self.is_polynomial() and o.is_polynomial():
            return RationalFunction(ctx, polys.add(self.num, o.num), self.den)
        if self.den == o.den:
            return RationalFunction._make(ctx, polys.add(self.num, o.num), self.den)
        num = polys.add(polys.mul(self.num, o.den), polys.mul(o.num, self.den))
        return RationalFunction._make(ctx, num, polys.mul(self.den, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.context, polys.neg(self.num), self.den)

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
        ctx = self.context
        if self.is_polynomial() and o.is_polynomial():
            return RationalFunction(ctx, polys.mul(self.num, o.num), self.den)
        if o.is_polynomial() and len(o.num) == 1 and not any(next(iter(o.num))):
            return RationalFunction(ctx, polys.scale(self.num, next(iter(o.num.values()))), self.den)
        return RationalFunction._make(ctx, polys.mul(self.num, o.num), polys.mul(self.den, o.den))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of the zero rational function")
        return RationalFunction._make(self.context, self.den, self.num)

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
        k = self.context.nvars
        return RationalFunction(self.context, polys.power(self.num, n, k),
                                polys.power(self.den, n, k))

    def diff(self, name):
        """Partial derivative with respect to the variable ``name``."""
        i = self.context.index(name)

        def d(p):
            out = {}
            for e, c in p.items():
                if e[i]:
                    e2 = list(e)
                    e2[i] -= 1
                    out[tuple(e2)] = c * e[i]
                    if not out[tuple(e2)]:
                        del out[tuple(e2)]
            return out

        ctx = self.context
        if self.is_polynomial():
            return RationalFunction(ctx, d(self.num), self.den)
        num = polys.sub(polys.mul(d(self.num), self.den), polys.mul(self.num, d(self.den)))
        return RationalFunction._make(ctx, num, polys.mul(self.den, self.den))

    def subs(self, images):
        """Simultaneous substitution ``var_i -> images[i]`` (RationalFunctions in any one context)."""
        if not images:
            return self
        target = images[0].context
        return _substitute(self, images, target)

    def __str__(self):
        from .printing import format_ratfunc
        return format_ratfunc(self)

    def __repr__(self):
        return f"RationalFunction({self})"


def _subst_poly(p, images, target):
    if all(img.is_polynomial() for img in images):
        num = polys.compose(p, [img.num for img in images], target.nvars, target.field.one)
        return RationalFunction(target, num, target._one_poly())
    out = target.zero
    cache = {}
    for e, c in p.items():
        term = target(c)
        for i, x in enumerate(e):
            if x:
                key = (i, x)
                pw = cache.get(key)
                if pw is None:
                    pw = cache[key] = images[i] ** x
                term = term * pw
        out = out + term
    return out


def _substitute(f, images, target):
    num = _subst_poly(f.num, images, target)
    if f.is_polynomial():
        return num
    return num / _subst_poly(f.den, images, target)


class FieldAutomorphism:
    """Substitution automorphism ``var_i -> images[i]`` of ``Frac D``.

    The inverse image list is stored alongside; :meth:`verify` checks both
    composites are the identity.  ``inverse_images=None`` builds a bare
    endomorphism whose invertibility is unknown (used to model suspect data).
    """

    __slots__ = ("context", "images", "_inverse_images", "_hash")

    def __init__(self, context, images: Sequence[RationalFunction], inverse_images=None):
        images = tuple(images)
        if len(images) != context.nvars:
            raise ValueError("one image per variable required")
        for img in images:
            if img.context != context:
                raise ContextMismatchError("image lives in a different context")
        self.context = context
        self.images = images
        self._inverse_images = tuple(inverse_images) if inverse_images is not None else None
        self._hash = None

    @classmethod
    def identity(cls, context):
        gens = context.gens()
        return cls(context, gens, gens)

    @classmethod
    def from_dict(cls, context, images: dict, inverse_images: dict | None = None):
        """Build from ``{name: image}``; unspecified variables are fixed."""
        def full(d):
            return [d.get(n, context.var(n)) for n in context.names]
        inv = full(inverse_images) if inverse_images is not None else None
        return cls(context, full(images), inv)

    @property
    def has_inverse(self):
        return self._inverse_images is not None

    def __call__(self, f):
        if not isinstance(f, RationalFunction):
            f = self.context(f)
        if f.context != self.context:
            raise ContextMismatchError(f"{f.context} vs {self.context}")
        if f.is_constant():
            return f
        return _substitute(f, self.images, self.context)

    def inverse(self):
        if self._inverse_images is None:
            raise ValueError("automorphism was built without an inverse")
        return FieldAutomorphism(self.context, self._inverse_images, self.images)

    def compose(self, other):
        """``self o other``: apply ``other`` first."""
        if other.context != self.context:
            raise ContextMismatchError("cannot compose across contexts")
        images = [self(img) for img in other.images]
        inv = None
        if self.has_inverse and other.has_inverse:
            inv = [other.inverse()(img) for img in self._inverse_images]
        return FieldAutomorphism(self.context, images, inv)

    __matmul__ = compose

    def power(self, k):
        if k < 0:
            return self.inverse().power(-k)
        result = FieldAutomorphism.identity(self.context)
        base = self
        while k:
            if k & 1:
                result = base.compose(result)
            k >>= 1
            if k:
                base = base.compose(base)
        return result

    def is_identity(self):
        return all(img == g for img, g in zip(self.images, self.context.gens()))

    def verify(self):
        """True iff the stored inverse really is a two-sided inverse."""
        if not self.has_inverse:
            return False
        inv = self.inverse()
        return self.compose(inv).is_identity() and inv.compose(self).is_identity()

    def jacobian_determinant(self):
        from .linalg import determinant
        ctx = self.context
        rows = [[img.diff(n) for n in ctx.names] for img in self.images]
        return determinant(rows, ctx.zero)

    def maps_ring_into_ring(self):
        """Images of variables (and inverses of Laurent variables) stay in the base ring."""
        for img, lf in zip(self.images, self.context.laurent):
            if not img.in_base_ring():
                return False
            if lf and not (img.inverse().in_base_ring()):
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, FieldAutomorphism):
            return NotImplemented
        return self.context == other.context and self.images == other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __str__(self):
        return "{" + ", ".join(f"{n} -> {img}" for n, img in zip(self.context.names, self.images)) + "}"

    __repr__ = __str__
