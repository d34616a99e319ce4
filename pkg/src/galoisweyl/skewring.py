"""The skew group ring ``L * Z^n``.

Elements are finite sums ``sum_v f_v e_v`` with ``f_v`` rational functions and
``e_v`` lattice monomials; multiplication is ``(f e_u)(g e_v) = f sigma_u(g) e_{u+v}``
where ``sigma_u`` is the composite shift for ``u``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .ratfunc import ContextMismatchError, FieldAutomorphism, RationalFunction, VariableContext
from .scalars import CycNumber, Scalar

__all__ = [
    "SkewContext", "SkewElement", "GroupAction", "ActionElement", "weyl_skew_context",
    "condition_xi",
]


class SkewContext:
    """Data of ``L * Z^n``: the base variable context and one shift per generator."""

    def __init__(self, base: VariableContext, shifts: Sequence[FieldAutomorphism], check=True):
        self.base = base
        self.shifts = tuple(shifts)
        for s in self.shifts:
            if s.context != base:
                raise ContextMismatchError("shift automorphism over a different context")
        self._cache = {}
        if check:
            for s in self.shifts:
                if not s.verify():
                    raise ValueError(f"shift {s} is not invertible")
            for a, b in itertools.combinations(self.shifts, 2):
                if a.compose(b) != b.compose(a):
                    raise ValueError("shift automorphisms do not commute")

    @property
    def rank(self):
        return len(self.shifts)

    def __eq__(self, other):
        if not isinstance(other, SkewContext):
            return NotImplemented
        return self is other or (self.base == other.base and self.shifts == other.shifts)

    def __hash__(self):
        return hash((self.base, self.shifts))

    def shift(self, u):
        """Composite automorphism ``sigma_u``, folded over generators in index order."""
        u = tuple(u)
        auto = self._cache.get(u)
        if auto is None:
            auto = FieldAutomorphism.identity(self.base)
            for s, k in zip(self.shifts, u):
                if k:
                    auto = s.power(k).compose(auto)
            self._cache[u] = auto
        return auto

    def zero_vector(self):
        return (0,) * self.rank

    def element(self, terms=None):
        return SkewElement(self, terms or {})

    def e(self, *v):
        if len(v) == 1 and isinstance(v[0], (tuple, list)):
            v = tuple(v[0])
        if len(v) != self.rank:
            raise ValueError(f"lattice vector must have length {self.rank}")
        return SkewElement(self, {tuple(v): self.base.one})

    def coeff(self, f):
        """``f * e_0`` for a rational function (or scalar) ``f``."""
        if not isinstance(f, RationalFunction):
            f = self.base(f)
        return SkewElement(self, {self.zero_vector(): f})

    @property
    def one(self):
        return self.coeff(1)

    @property
    def zero(self):
        return SkewElement(self, {})

    def __repr__(self):
        return f"SkewContext({self.base}, rank={self.rank})"


def weyl_skew_context(n, field=None, names=None):
    """``k(t_1..t_n) * Z^n`` with ``sigma_i(t_j) = t_j - delta_ij``."""
    from .scalars import ScalarField
    field = field or ScalarField()
    names = tuple(names or (f"t{i + 1}" for i in range(n)))
    ctx = VariableContext(names, field=field)
    shifts = []
    for i, name in enumerate(names):
        v = ctx.var(name)
        shifts.append(FieldAutomorphism.from_dict(ctx, {name: v - 1}, {name: v + 1}))
    return SkewContext(ctx, shifts, check=False)


class SkewElement:
    __slots__ = ("context", "terms")

    def __init__(self, context, terms):
        self.context = context
        self.terms = {tuple(v): f for v, f in terms.items() if f}

    def _coerce(self, other):
        if isinstance(other, SkewElement):
            if other.context != self.context:
                raise ContextMismatchError("skew elements over different contexts")
            return other
        if isinstance(other, (int, Fraction, CycNumber, Scalar, RationalFunction)):
            return self.context.coeff(other)
        return None

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for v, f in o.terms.items():
            g = terms.get(v)
            s = f if g is None else g + f
            if s:
                terms[v] = s
            else:
                terms.pop(v, None)
        return SkewElement(self.context, terms)

    __radd__ = __add__

    def __neg__(self):
        return SkewElement(self.context, {v: -f for v, f in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return skew_mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return skew_mul(o, self)

    def inverse(self):
        """Inverse of a monomial ``f e_v`` (``f != 0``)."""
        if len(self.terms) != 1:
            raise ValueError("only monomials f*e_v are invertible here")
        (v, f), = self.terms.items()
        mv = tuple(-x for x in v)
        return SkewElement(self.context, {mv: self.context.shift(mv)(f.inverse())})

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.context.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def support(self):
        return skew_support(self)

    def coefficient(self, v):
        return self.terms.get(tuple(v), self.context.base.zero)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        from .printing import fmt_ratfunc, format_terms, lattice_atom
        zero = self.context.zero_vector()
        return format_terms(self.sorted_terms(), fmt_ratfunc,
                            lambda v: "" if v == zero else lattice_atom(v))

    def __repr__(self):
        return f"SkewElement({self})"

    def to_json(self):
        """``{"v1,...,vn": coefficient-string}`` with keys in lexicographic order."""
        return {",".join(str(x) for x in v): str(f) for v, f in self.sorted_terms()}

    @classmethod
    def from_json(cls, context, data):
        from .parser import evaluate
        terms = {}
        for key, text in data.items():
            v = tuple(int(x) for x in key.split(",")) if key else ()
            terms[v] = evaluate(text, context.base)
        return cls(context, terms)


def skew_mul(a, b):
    if a.context != b.context:
        raise ContextMismatchError("skew elements over different contexts")
    ctx = a.context
    out = {}
    for u, f in a.terms.items():
        sigma = None
        for v, g in b.terms.items():
            if any(u) and not g.is_constant():
                if sigma is None:
                    sigma = ctx.shift(u)
                g = sigma(g)
            h = f * g
            w = tuple(x + y for x, y in zip(u, v))
            cur = out.get(w)
            out[w] = h if cur is None else cur + h
    return SkewElement(ctx, out)


def skew_support(a):
    return set(a.terms)


@dataclass(frozen=True)
class ActionElement:
    """One group element acting on ``L * Z^n``.

    ``f e_v -> chi(v) * field_auto(f) * e_{A v}`` with ``chi(v) = prod chi_i^{v_i}``.
    ``character`` defaults to all ones (the pure pair action).
    """

    field_auto: FieldAutomorphism
    lattice: tuple  # rows of the integer matrix A
    character: tuple = None
    label: object = None

    def apply_vector(self, v):
        return tuple(sum(a * x for a, x in zip(row, v)) for row in self.lattice)

    def chi(self, v, field):
        c = field.one
        if self.character is None:
            return c
        for ci, x in zip(self.character, v):
            if x:
                c = c * ci ** x
        return c


class GroupAction:
    """A finite group acting on ``L * Z^n`` by (field automorphism, lattice automorphism) pairs."""

    def __init__(self, context: SkewContext, elements: Sequence[ActionElement], descriptor=None):
        self.context = context
        self.elements = list(elements)
        self.descriptor = descriptor
        for el in self.elements:
            det = _int_det(el.lattice)
            if abs(det) != 1:
                raise ValueError(f"lattice part {el.lattice} is not unimodular")

    def __len__(self):
        return len(self.elements)

    def act(self, g, a):
        if isinstance(g, int):
            if not 0 <= g < len(self.elements):
                raise IndexError(f"group element index {g} out of range")
            g = self.elements[g]
        if a.context != self.context:
            raise ContextMismatchError("action over a different skew context")
        F = self.context.base.field
        terms = {}
        for v, f in a.terms.items():
            w = g.apply_vector(v)
            terms[w] = g.field_auto(f) * g.chi(v, F)
        return SkewElement(self.context, terms)

    def check_compatibility(self, el):
        """``g o sigma_{e_i} == sigma_{A e_i} o g`` on every base variable.

        Returns ``None`` on success, otherwise the failing generator index.
        """
        ctx = self.context
        n = ctx.rank
        for i in range(n):
            ei = tuple(int(j == i) for j in range(n))
            lhs = el.field_auto.compose(ctx.shift(ei))
            rhs = ctx.shift(el.apply_vector(ei)).compose(el.field_auto)
            if lhs != rhs:
                return i
        return None

    def verify(self):
        return all(self.check_compatibility(el) is None for el in self.elements)

    def compose(self, g, h):
        """Action element for ``g h`` (apply ``h`` first)."""
        F = self.context.base.field
        n = self.context.rank
        A = tuple(tuple(sum(g.lattice[i][k] * h.lattice[k][j] for k in range(n))
                        for j in range(n)) for i in range(n))
        char = []
        for j in range(n):
            ej = tuple(int(k == j) for k in range(n))
            char.append(h.chi(ej, F) * g.chi(h.apply_vector(ej), F))
        return ActionElement(g.field_auto.compose(h.field_auto), A, tuple(char))

    def same_action(self, x, y):
        F = self.context.base.field
        n = self.context.rank
        if x.lattice != y.lattice or x.field_auto != y.field_auto:
            return False
        for j in range(n):
            ej = tuple(int(k == j) for k in range(n))
            if x.chi(ej, F) != y.chi(ej, F):
                return False
        return True

    def is_closed(self):
        for g in self.elements:
            for h in self.elements:
                gh = self.compose(g, h)
                if not any(self.same_action(gh, k) for k in self.elements):
                    return False
        return True


def _int_det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j]:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * M[0][j] * _int_det(minor)
    return total


def condition_xi(context: SkewContext, generators, bound=3):
    """Bounded check of condition (Xi) on the lattice restricted to ``K``.

    Two lattice elements agreeing on every invariant-field generator must be
    equal; equivalently no nonzero ``w`` (sup-norm <= ``bound``) has
    ``sigma_w`` fixing all generators.  Returns ``(holds, witness, bound)``.
    """
    n = context.rank
    for w in itertools.product(range(-bound, bound + 1), repeat=n):
        nz = next((x for x in w if x), 0)
        if nz <= 0:
            continue
        sigma = context.shift(w)
        if all(sigma(g) == g for g in generators):
            return False, w, bound
    return True, None, bound
