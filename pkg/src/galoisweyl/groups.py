"""Monomial reflection groups and their actions.

An element ``(a, pi)`` of ``G(m,1,n)`` is the monomial matrix ``D_a P_pi``:
``P_pi`` sends coordinate ``j`` to ``pi(j)`` and ``D_a`` scales coordinate
``i`` by ``w^{a_i}``.  Products follow ``(a, pi)(b, rho) = (a + pi.b, pi rho)``
with ``(pi.b)_{pi(j)} = b_j``.

On the Weyl algebra the element acts by ``x_j -> w^{-a_{pi(j)}} x_{pi(j)}``
and ``d_j -> w^{a_{pi(j)}} d_{pi(j)}``, so a single cyclic generator is
``d -> w d, x -> w^{-1} x``.  The torus kinds reuse the same element type
with ``m = 2``: a flipped coordinate applies ``eps_i``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .ratfunc import FieldAutomorphism
from .scalars import ScalarField
from .skewring import ActionElement, GroupAction, weyl_skew_context

__all__ = [
    "GroupElement", "GroupDescriptor", "MembershipError", "CapExceededError",
    "group_mul", "group_enumerate", "quotient_image", "induced_action",
    "WeylGroupAction", "PolyGroupAction", "parse_element", "DEFAULT_CAP",
    "skew_action_element", "unit_root", "group_inverse", "element_order",
]

DEFAULT_CAP = 10368

KINDS = ("G", "S", "A", "cyclic", "B-torus", "D-torus")


class MembershipError(ValueError):
    """Element does not belong to the stated group."""


class CapExceededError(ValueError):
    """Group order exceeds the enumeration cap."""


@dataclass(frozen=True)
class GroupElement:
    exponents: tuple
    perm: tuple  # perm[j] = pi(j), 0-based

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(self.exponents))
        object.__setattr__(self, "perm", tuple(self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.exponents) != len(self.perm):
            raise ValueError("exponent vector and permutation sizes differ")

    @property
    def n(self):
        return len(self.perm)

    @classmethod
    def identity(cls, n):
        return cls((0,) * n, tuple(range(n)))

    def cycles(self):
        seen = set()
        out = []
        for start in range(self.n):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.perm[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.perm[j]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def parity(self):
        """0 for even permutations, 1 for odd (inversion count)."""
        inv = sum(1 for i, j in itertools.combinations(range(self.n), 2) if self.perm[i] > self.perm[j])
        return inv % 2

    def __str__(self):
        cyc = "".join("(" + " ".join(str(j + 1) for j in c) + ")" for c in self.cycles()) or "()"
        return "[" + ",".join(str(a) for a in self.exponents) + "; " + cyc + "]"


def parse_element(text, n=None):
    """Inverse of ``str(GroupElement)``: ``"[1,0; (1 2)]"``."""
    m = re.fullmatch(r"\s*\[\s*([-\d,\s]*)\s*;\s*((?:\([\d\s]*\))*)\s*\]\s*", text)
    if not m:
        raise ValueError(f"cannot parse group element {text!r}")
    exps = tuple(int(x) for x in m.group(1).replace(" ", "").split(",") if x != "")
    size = n if n is not None else len(exps)
    perm = list(range(size))
    for cyc in re.findall(r"\(([\d\s]*)\)", m.group(2)):
        pts = [int(x) - 1 for x in cyc.split()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return GroupElement(exps, tuple(perm))


@dataclass(frozen=True)
class GroupDescriptor:
    """``kind`` is one of ``G`` (G(m,p,n)), ``S``, ``A``, ``cyclic`` (G_m^n),
    ``B-torus``, ``D-torus``."""

    kind: str
    n: int
    m: int = 1
    p: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.kind in ("S", "A"):
            object.__setattr__(self, "m", 1)
            object.__setattr__(self, "p", 1)
        if self.kind in ("B-torus", "D-torus"):
            object.__setattr__(self, "m", 2)
            object.__setattr__(self, "p", 1 if self.kind == "B-torus" else 2)
        if self.kind == "cyclic":
            object.__setattr__(self, "p", 1)
        if self.m < 1 or self.p < 1 or self.m % self.p:
            raise ValueError(f"need p | m, got m={self.m}, p={self.p}")
        if self.kind == "A" and self.n < 2:
            raise ValueError("alternating group needs n >= 2")

    @classmethod
    def G(cls, m, p, n):
        return cls("G", n, m, p)

    @property
    def is_torus(self):
        return self.kind in ("B-torus", "D-torus")

    def order(self):
        n, m, p = self.n, self.m, self.p
        if self.kind == "cyclic":
            return m ** n
        if self.kind == "A":
            return math.factorial(n) // 2
        return m ** n * math.factorial(n) // p

    def contains(self, g):
        if g.n != self.n:
            return False
        if any(not 0 <= a < self.m for a in g.exponents):
            return False
        if sum(g.exponents) % self.p:
            return False
        if self.kind == "cyclic" and g.perm != tuple(range(self.n)):
            return False
        if self.kind == "A" and g.parity():
            return False
        return True

    def check(self, g):
        if not self.contains(g):
            raise MembershipError(f"{g} is not in {self}")

    def identity(self):
        return GroupElement.identity(self.n)

    def __str__(self):
        if self.kind == "G":
            return f"G({self.m},{self.p},{self.n})"
        if self.kind == "cyclic":
            return f"G_{self.m}^{self.n}"
        if self.kind in ("S", "A"):
            return f"{self.kind}_{self.n}"
        return f"{self.kind[0]}_{self.n}-torus"


def _mul(m, g, h):
    n = g.n
    twisted = [0] * n
    for j in range(n):
        twisted[g.perm[j]] = h.exponents[j]
    exps = tuple((a + b) % m for a, b in zip(g.exponents, twisted))
    perm = tuple(g.perm[h.perm[j]] for j in range(n))
    return GroupElement(exps, perm)


def group_mul(desc, g, h):
    desc.check(g)
    desc.check(h)
    return _mul(desc.m, g, h)


def group_inverse(desc, g):
    n = g.n
    inv = [0] * n
    for j in range(n):
        inv[g.perm[j]] = j
    exps = [0] * n
    for i in range(n):
        # (pi^{-1}.a)_{pi^{-1}(i)} = a_i
        exps[inv[i]] = (-g.exponents[i]) % desc.m
    return GroupElement(tuple(exps), tuple(inv))


def group_power(desc, g, k):
    r = desc.identity()
    for _ in range(k):
        r = _mul(desc.m, g, r)
    return r


def element_order(desc, g):
    r, k = g, 1
    ident = desc.identity()
    while r != ident:
        r = _mul(desc.m, g, r)
        k += 1
    return k


def group_enumerate(desc, cap=DEFAULT_CAP):
    """All elements, ordered lexicographically by (permutation, exponents)."""
    order = desc.order()
    if order > cap:
        raise CapExceededError(f"|{desc}| = {order} exceeds cap {cap}")
    n, m = desc.n, desc.m
    perms = [tuple(range(n))] if desc.kind == "cyclic" else list(itertools.permutations(range(n)))
    out = []
    for perm in perms:
        for exps in itertools.product(range(m), repeat=n):
            g = GroupElement(exps, perm)
            if desc.contains(g):
                out.append(g)
    return out


def quotient_image(g, m, p):
    """Image of ``g`` in ``G(m,1,n) -> Z/m -> Z/p`` (sum of exponents mod ``p``)."""
    if p < 1 or m % p:
        raise ValueError(f"p={p} does not divide m={m}")
    if any(not 0 <= a < m for a in g.exponents):
        raise MembershipError(f"{g} is not in G({m},1,{g.n})")
    return sum(g.exponents) % p


# ---------------------------------------------------------------------------
# induced actions


def _require_roots(field, m):
    if m > 2 and field.cyclotomic_order % m:
        raise ValueError(f"scalar field must contain the {m}-th roots of unity")


def unit_root(field, m, k):
    """``w^k`` for the primitive ``m``-th root ``w = zeta_M^{M/m}`` of ``field``."""
    if m <= 2:
        return field(-1 if (m == 2 and k % 2) else 1)
    return field.zeta((field.cyclotomic_order // m) * k)


class WeylGroupAction:
    """A group acting on a (possibly localized) Weyl algebra."""

    def __init__(self, desc, algebra, cap=DEFAULT_CAP):
        if desc.n != algebra.n:
            raise ValueError("group and algebra ranks differ")
        if desc.is_torus and not algebra.localized:
            raise ValueError("torus actions need the localized Weyl algebra")
        _require_roots(algebra.field, desc.m)
        self.descriptor = desc
        self.algebra = algebra
        self.cap = cap
        self._autos = {}
        self._elements = None

    def elements(self):
        if self._elements is None:
            self._elements = group_enumerate(self.descriptor, self.cap)
        return self._elements

    def __len__(self):
        return len(self.elements())

    def _w(self, k):
        return unit_root(self.algebra.field, self.descriptor.m, k)

    def epsilon(self, i):
        """The single torus flip ``eps_i`` (1-based).

        For ``D-torus`` this is a generator of the ambient ``(Z/2)^n``, not
        an element of the group itself.
        """
        if not self.descriptor.is_torus:
            raise ValueError("eps_i only exists for torus kinds")
        exps = tuple(int(j == i - 1) for j in range(self.descriptor.n))
        return self.automorphism(GroupElement(exps, tuple(range(self.descriptor.n))), strict=False)

    def automorphism(self, g, strict=True):
        from .weyl import WeylAutomorphism
        auto = self._autos.get(g)
        if auto is not None:
            return auto
        if strict:
            self.descriptor.check(g)
        alg = self.algebra
        n = alg.n
        xs, ds, xis = [], [], []
        for j in range(n):
            tgt = g.perm[j]
            a = g.exponents[tgt]
            x, d = alg.x(tgt + 1), alg.d(tgt + 1)
            if not self.descriptor.is_torus:
                xs.append(x * self._w(-a))
                ds.append(d * self._w(a))
                if alg.localized:
                    xis.append(alg.xinv(tgt + 1) * self._w(a))
            elif not a:
                xs.append(x)
                ds.append(d)
                xis.append(alg.xinv(tgt + 1))
            elif self.descriptor.kind == "B-torus":
                # eps(x) = -x^{-1}, eps(d) = x^2 d
                xs.append(-alg.xinv(tgt + 1))
                ds.append(x * x * d)
                xis.append(-x)
            else:
                # eps(x) = x^{-1}, eps(d) = -x^2 d
                xs.append(alg.xinv(tgt + 1))
                ds.append(-(x * x * d))
                xis.append(x)
        auto = WeylAutomorphism(alg, xs, ds, xis if alg.localized else None)
        self._autos[g] = auto
        return auto

    def act(self, g, a):
        return self.automorphism(g)(a)


class PolyGroupAction:
    """The induced action on ``k(t_1..t_n)`` (or ``k(H_1..H_n)``).

    The cyclic part fixes every ``t_i``; permutations permute them and a
    torus flip sends ``t_i -> 2 - t_i``.
    """

    def __init__(self, desc, context, cap=DEFAULT_CAP):
        if context.nvars != desc.n:
            raise ValueError("context must have one variable per coordinate")
        self.descriptor = desc
        self.context = context
        self.cap = cap
        self._autos = {}
        self._elements = None

    def elements(self):
        if self._elements is None:
            self._elements = group_enumerate(self.descriptor, self.cap)
        return self._elements

    def __len__(self):
        return len(self.elements())

    def automorphism(self, g):
        auto = self._autos.get(g)
        if auto is None:
            auto = self._autos[g] = _field_part(self.descriptor, g, self.context)
        return auto

    def act(self, g, f):
        return self.automorphism(g)(f)


def _field_part(desc, g, ctx):
    gens = ctx.gens()
    n = desc.n
    images = [None] * n
    inverse = [None] * n
    for j in range(n):
        tgt = g.perm[j]
        flip = desc.is_torus and g.exponents[tgt]
        images[j] = (2 - gens[tgt]) if flip else gens[tgt]
    # inverse: t_{pi(j)} -> (maybe flipped) t_j
    for j in range(n):
        tgt = g.perm[j]
        flip = desc.is_torus and g.exponents[tgt]
        inverse[tgt] = (2 - gens[j]) if flip else gens[j]
    return FieldAutomorphism(ctx, images, inverse)


def skew_action_element(desc, g, skew, field):
    n = desc.n
    F = _field_part(desc, g, skew.base)
    A = [[0] * n for _ in range(n)]
    char = []
    for j in range(n):
        tgt = g.perm[j]
        a = g.exponents[tgt]
        if desc.is_torus:
            A[tgt][j] = -1 if a else 1
            char.append(field(-1) if (a and desc.kind == "B-torus") else field.one)
        else:
            A[tgt][j] = 1
            char.append(unit_root(field, desc.m, -a))
    return ActionElement(F, tuple(tuple(r) for r in A), tuple(char), label=g)


def induced_action(desc, target="weyl", algebra=None, context=None, cap=DEFAULT_CAP):
    """Action data of ``desc`` on a target.

    ``target`` is ``"weyl"`` (returns :class:`WeylGroupAction`), ``"skew"``
    (a :class:`~galoisweyl.skewring.GroupAction` on the standard Weyl skew
    context), or ``"poly"`` (a :class:`PolyGroupAction` on the base field).
    The skew elements for ``B-torus`` carry the sign character
    ``e_i -> -e_i^{-1}`` that matches ``eps_i(x_i) = -x_i^{-1}``.
    """
    from .weyl import WeylAlgebra
    field = None
    if algebra is not None:
        field = algebra.field
    elif context is not None:
        field = context.field if hasattr(context, "field") else context.base.field
    if field is None:
        field = ScalarField(desc.m if desc.m > 2 else 1)
    if target == "weyl":
        algebra = algebra or WeylAlgebra(desc.n, localized=desc.is_torus, field=field)
        return WeylGroupAction(desc, algebra, cap)
    if target == "poly":
        from .ratfunc import VariableContext
        ctx = context or VariableContext(tuple(f"t{i + 1}" for i in range(desc.n)), field=field)
        return PolyGroupAction(desc, ctx, cap)
    if target == "skew":
        _require_roots(field, desc.m)
        skew = context if context is not None else weyl_skew_context(desc.n, field)
        elements = [skew_action_element(desc, g, skew, field)
                    for g in group_enumerate(desc, cap)]
        action = GroupAction(skew, elements, descriptor=desc)
        for el in action.elements:
            bad = action.check_compatibility(el)
            if bad is not None:
                raise ValueError(f"{el.label} violates shift compatibility at generator {bad + 1}")
        return action
    raise ValueError(f"incompatible target {target!r}")
