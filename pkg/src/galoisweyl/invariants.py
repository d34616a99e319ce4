"""Averaging, invariance, the support criterion, Gamma generators and the
``G(m,p,n)`` eigenspace decomposition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np
from scipy.optimize import linprog

from .groups import (
    DEFAULT_CAP, GroupDescriptor, GroupElement, PolyGroupAction, WeylGroupAction,
    induced_action, quotient_image, unit_root,
)
from .linalg import hermite_rows, lattice_index
from .ratfunc import RationalFunction, VariableContext
from .skewring import GroupAction, SkewElement
from .weyl import WeylAlgebra, WeylElement

__all__ = [
    "SupportSet", "Verdict", "InvarianceResult", "DecompositionResult",
    "reynolds", "is_invariant", "monoid_generates", "gamma_generators",
    "jacobian_determinant", "eigen_decompose", "action_for", "weyl_generator_supports",
    "invariant_generator_supports",
]


# ---------------------------------------------------------------------------
# actions


_ACTIONS = {}


def action_for(desc: GroupDescriptor, a, cap=DEFAULT_CAP):
    """The induced action of ``desc`` on the algebra ``a`` lives in (cached)."""
    if isinstance(a, WeylElement):
        key = (desc, "weyl", a.algebra, cap)
        build = lambda: WeylGroupAction(desc, a.algebra, cap)  # noqa: E731
    elif isinstance(a, RationalFunction):
        key = (desc, "poly", a.context, cap)
        build = lambda: PolyGroupAction(desc, a.context, cap)  # noqa: E731
    elif isinstance(a, SkewElement):
        key = (desc, "skew", a.context, cap)
        build = lambda: induced_action(desc, "skew", context=a.context, cap=cap)  # noqa: E731
    else:
        raise TypeError(f"no group action on {type(a).__name__}")
    act = _ACTIONS.get(key)
    if act is None:
        act = _ACTIONS[key] = build()
    return act


def _pairs(act):
    """(label, callable) for every group element."""
    if isinstance(act, GroupAction):
        return [(el.label, (lambda el: lambda a: act.act(el, a))(el)) for el in act.elements]
    return [(g, (lambda g: lambda a: act.act(g, a))(g)) for g in act.elements()]


def _field_of(a):
    if isinstance(a, WeylElement):
        return a.algebra.field
    if isinstance(a, RationalFunction):
        return a.context.field
    return a.context.base.field


def reynolds(desc: GroupDescriptor, a, cap=DEFAULT_CAP):
    """``(1/|G|) sum_g g(a)``."""
    act = action_for(desc, a, cap)
    pairs = _pairs(act)
    total = None
    for _, g in pairs:
        img = g(a)
        total = img if total is None else total + img
    return total * _field_of(a)(Fraction(1, len(pairs)))


@dataclass
class InvarianceResult:
    invariant: bool
    witness: GroupElement = None

    def __bool__(self):
        return self.invariant


def is_invariant(desc: GroupDescriptor, a, cap=DEFAULT_CAP) -> InvarianceResult:
    """``g(a) == a`` for all enumerated ``g``; otherwise the first violator."""
    act = action_for(desc, a, cap)
    for label, g in _pairs(act):
        if g(a) != a:
            return InvarianceResult(False, label)
    return InvarianceResult(True)


# ---------------------------------------------------------------------------
# the support criterion


@dataclass(frozen=True)
class SupportSet:
    n: int
    vectors: frozenset

    def __init__(self, n, vectors):
        vs = frozenset(tuple(int(x) for x in v) for v in vectors)
        for v in vs:
            if len(v) != n:
                raise ValueError(f"vector {v} does not have rank {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "vectors", vs)

    @classmethod
    def of(cls, *elements):
        """Union of the supports of skew elements."""
        n = elements[0].context.rank
        return cls(n, set().union(*(e.terms.keys() for e in elements)))

    def sorted(self):
        return sorted(self.vectors)


@dataclass
class Verdict:
    verdict: str  # yes | no | inconclusive
    bound: int
    witnesses: dict = field(default_factory=dict)
    certificate: dict = field(default_factory=dict)
    reason: str = ""

    def __bool__(self):
        return self.verdict == "yes"

    def to_json(self):
        wit = {",".join(map(str, k)): [list(v) for v in vs]
               for k, vs in sorted(self.witnesses.items())}
        return {"verdict": self.verdict, "bound": self.bound, "reason": self.reason,
                "witnesses": wit,
                "certificate": {k: _plain(v) for k, v in sorted(self.certificate.items())}}


def _plain(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_plain(y) for y in x]
    return x


def _targets(n):
    out = []
    for i in range(n):
        for s in (1, -1):
            out.append(tuple(s * int(j == i) for j in range(n)))
    return out


def _bfs(vectors, n, bound, max_points):
    """Nonnegative combinations with coefficient sum <= bound reaching each ``+-e_i``."""
    targets = set(_targets(n))
    zero = (0,) * n
    parent = {zero: None}
    frontier = [zero]
    found = {}
    for _ in range(bound):
        nxt = []
        for p in frontier:
            for v in vectors:
                q = tuple(a + b for a, b in zip(p, v))
                if q in parent:
                    continue
                parent[q] = (p, v)
                nxt.append(q)
                if q in targets:
                    found[q] = None
        if len(found) == len(targets) or not nxt or len(parent) > max_points:
            frontier = nxt
            break
        frontier = nxt
    witnesses = {}
    for t in found:
        path, q = [], t
        while parent[q] is not None:
            q, v = parent[q]
            path.append(v)
        witnesses[t] = tuple(sorted(path))
    return witnesses


def _rationalize(xs):
    return [Fraction(float(x)).limit_denominator(10 ** 6) for x in xs]


def _cone_test(vectors, n):
    """Exact answer to "does the cone over ``vectors`` equal ``R^n``?".

    ``("full", lam)``: ``lam >= 1`` integer with ``sum lam_v v = 0`` (then every
    ``-v`` lies in the cone).  ``("proper", c)``: ``c.v >= 0`` for all ``v``
    and ``c != 0``.  ``(None, None)`` if the LP answer could not be certified.
    """
    V = np.array(vectors, dtype=float).T  # n x k
    k = V.shape[1]
    res = linprog(np.zeros(k), A_eq=V, b_eq=np.zeros(n), bounds=[(1, None)] * k, method="highs")
    if res.status == 0:
        lam = _rationalize(res.x)
        den = 1
        for x in lam:
            den = den * x.denominator // gcd(den, x.denominator)
        lam = [int(x * den) for x in lam]
        if all(x >= 1 for x in lam) and all(
                sum(l * v[i] for l, v in zip(lam, vectors)) == 0 for i in range(n)):
            return "full", lam
    # separating functional: c.v >= 0, sum_v c.v = 1
    A_ub = -V.T
    A_eq = V.sum(axis=1).reshape(1, n)
    res = linprog(np.zeros(n), A_ub=A_ub, b_ub=np.zeros(k), A_eq=A_eq, b_eq=[1.0],
                  bounds=[(None, None)] * n, method="highs")
    if res.status == 0:
        c = _rationalize(res.x)
        if any(c) and all(sum(ci * vi for ci, vi in zip(c, v)) >= 0 for v in vectors):
            den = 1
            for x in c:
                den = den * x.denominator // gcd(den, x.denominator)
            return "proper", [int(x * den) for x in c]
    return None, None


def monoid_generates(support: SupportSet, bound=None, max_points=200000) -> Verdict:
    """Does ``support`` generate ``Z^n`` as a monoid?

    ``yes`` carries either explicit combinations for every ``+-e_i`` (found
    by breadth-first search with coefficient sum ``<= bound``) or, failing
    that, a strictly positive integer relation; together with subgroup
    index 1 this proves the claim.  ``no`` carries the subgroup index or a
    functional ``c`` with ``c.v >= 0`` on the support.
    """
    n = support.n
    if bound is None:
        bound = 12 * n
    vectors = support.sorted()
    if not vectors:
        return Verdict("no", bound, certificate={"subgroup_index": 0}, reason="empty support")
    index = lattice_index(vectors, n)
    if index != 1:
        reason = ("support does not span Q^n" if index == 0
                  else f"support generates a subgroup of index {index}")
        return Verdict("no", bound, certificate={"subgroup_index": index,
                                                 "hermite_rows": hermite_rows(vectors)},
                       reason=reason)
    wit = _bfs(vectors, n, bound, max_points)
    if len(wit) == 2 * n:
        return Verdict("yes", bound, witnesses=wit, certificate={"subgroup_index": 1},
                       reason="every +-e_i reached by breadth-first search")
    kind, data = _cone_test(vectors, n)
    if kind == "proper":
        return Verdict("no", bound, witnesses=wit,
                       certificate={"subgroup_index": 1, "functional": data},
                       reason="a nonzero functional is nonnegative on the support")
    if kind == "full":
        return Verdict("yes", bound, witnesses=wit,
                       certificate={"subgroup_index": 1, "positive_relation": data},
                       reason="subgroup is Z^n and a strictly positive relation exists")
    return Verdict("inconclusive", bound, witnesses=wit, certificate={"subgroup_index": 1},
                   reason=f"no certificate within bound {bound}")


def weyl_generator_supports(n):
    """Supports of the images of ``x_1..x_n`` and ``d_1..d_n``."""
    from .weyl import weyl_embed
    A = WeylAlgebra(n)
    gens = [A.x(i + 1) for i in range(n)] + [A.d(i + 1) for i in range(n)]
    return SupportSet.of(*(weyl_embed(g) for g in gens))


def invariant_generator_supports(m, n):
    """Supports of ``Delta_m = sum d_i^m`` and ``X_m = sum x_i^m`` through
    ``A_n^m = D(a, sigma)`` and its embedding into ``k(H) * Z^n``."""
    from .gwa import cyclic_invariant, gwa_embed
    G = cyclic_invariant(m, n)
    delta = sum((G.Xm(i + 1) for i in range(n)), G.zero)
    xm = sum((G.Xp(i + 1) for i in range(n)), G.zero)
    return SupportSet.of(gwa_embed(delta), gwa_embed(xm))


# ---------------------------------------------------------------------------
# Gamma


def _elementary(xs, k, one):
    total = one * 0
    for combo in itertools.combinations(xs, k):
        p = one
        for x in combo:
            p = p * x
        total = total + p
    return total


def jacobian_determinant(gens, context):
    """``det(d g_i / d t_j)``; needs exactly one generator per variable."""
    from .linalg import determinant
    if len(gens) != context.nvars:
        raise ValueError(f"need {context.nvars} generators, got {len(gens)}")
    rows = [[g.diff(name) for name in context.names] for g in gens]
    return determinant(rows, context.zero)


def gamma_generators(desc: GroupDescriptor, context: VariableContext = None, verify=True):
    """Generators of ``k[t_1..t_n]^W`` for the induced action on the ``t_i``.

    Permutation-type groups give elementary symmetric polynomials (the
    cyclic part acts trivially on the ``t_i``); ``cyclic`` gives the
    ``t_i`` themselves; ``A`` adds the Vandermonde product; torus kinds use
    ``(1 - t_i)^2`` and ``D-torus`` replaces the top one by ``prod (1 - t_i)``.
    The first ``n`` generators are always algebraically independent; the
    extra Vandermonde element for ``A`` is a secondary invariant.
    """
    n = desc.n
    ctx = context or VariableContext(tuple(f"t{i + 1}" for i in range(n)))
    if ctx.nvars != n:
        raise ValueError("context must have one variable per coordinate")
    ts = ctx.gens()
    one = ctx.one
    if desc.kind == "cyclic":
        gens = list(ts)
    elif desc.kind in ("S", "G"):
        gens = [_elementary(ts, k, one) for k in range(1, n + 1)]
    elif desc.kind == "A":
        gens = [_elementary(ts, k, one) for k in range(1, n + 1)]
        vander = one
        for i, j in itertools.combinations(range(n), 2):
            vander = vander * (ts[i] - ts[j])
        gens.append(vander)
    elif desc.kind == "B-torus":
        sq = [(1 - t) ** 2 for t in ts]
        gens = [_elementary(sq, k, one) for k in range(1, n + 1)]
    elif desc.kind == "D-torus":
        sq = [(1 - t) ** 2 for t in ts]
        gens = [_elementary(sq, k, one) for k in range(1, n)]
        prod = one
        for t in ts:
            prod = prod * (1 - t)
        gens.append(prod)
    else:
        raise ValueError(f"unsupported descriptor {desc}")
    if verify:
        for g in gens:
            res = is_invariant(desc, g)
            if not res:
                raise RuntimeError(f"generator {g} is not invariant (witness {res.witness})")
    return gens


# ---------------------------------------------------------------------------
# eigenspace decomposition for G(m,p,n) inside H = G(m,1,n)


@dataclass
class DecompositionResult:
    """Output of :func:`eigen_decompose`.

    ``certified_memberships[k]`` is the stated certificate: the quotient
    ``(x_1...x_n)^{-mk/p} P_k`` is a polynomial and ``H``-invariant.
    ``localized_invariance[k]`` drops the polynomial requirement and checks
    ``H``-invariance of the quotient in the localized algebra.
    """

    m: int
    p: int
    n: int
    h: GroupElement
    epsilon: object
    components: list
    quotients: list
    polynomial: list
    localized_invariance: list
    sums_to_input: bool
    eigen_identities: list

    @property
    def certified_memberships(self):
        return [a and b for a, b in zip(self.polynomial, self.localized_invariance)]

    @property
    def passed(self):
        return self.sums_to_input and all(self.eigen_identities) and all(self.certified_memberships)

    @property
    def decomposition_holds(self):
        """Sum and eigenvalue identities plus localized invariance."""
        return self.sums_to_input and all(self.eigen_identities) and all(self.localized_invariance)

    def to_json(self):
        return {"m": self.m, "p": self.p, "n": self.n, "h": str(self.h),
                "epsilon": str(self.epsilon),
                "components": [str(c) for c in self.components],
                "quotients": [str(q) for q in self.quotients],
                "polynomial": self.polynomial,
                "localized_invariance": self.localized_invariance,
                "certified_memberships": self.certified_memberships,
                "sums_to_input": self.sums_to_input, "eigen_identities": self.eigen_identities,
                "verdict": "pass" if self.passed else "fail"}


def _shift_x(a, L, c):
    """``(x_1...x_n)^c * a`` moved into the localized algebra ``L``."""
    n = L.n
    terms = {}
    for k, coef in a.terms.items():
        key = tuple(x + c for x in k[:n]) + k[n:]
        terms[key] = coef
    return WeylElement(L, terms)


def eigen_decompose(m, p, n, h: GroupElement, a: WeylElement, check_input=True) -> DecompositionResult:
    """Split a ``G(m,p,n)``-invariant ``a`` into ``h``-eigencomponents.

    ``P_k = (1/p) sum_j eps^{-kj} h^j(a)`` with ``eps`` the eigenvalue of
    ``h`` on ``(x_1...x_n)^{m/p}``.  Since ``h^p`` lies in ``G(m,p,n)`` the
    components sum to ``a`` and ``h(P_k) = eps^k P_k``.  Each quotient
    ``(x_1...x_n)^{-mk/p} P_k`` is formed in the localized algebra and
    tested for being a polynomial and for ``G(m,1,n)``-invariance.
    """
    if p < 1 or m % p:
        raise ValueError(f"p={p} does not divide m={m}")
    A = a.algebra
    if A.n != n or A.localized:
        raise ValueError("a must live in the (non-localized) Weyl algebra of rank n")
    H = GroupDescriptor.G(m, 1, n)
    H.check(h)
    q = quotient_image(h, m, p)
    if gcd(q, p) != 1:
        raise ValueError(f"h maps to {q} in Z/{p}, which is not a generator")
    G = GroupDescriptor.G(m, p, n)
    if check_input:
        res = is_invariant(G, a)
        if not res:
            raise ValueError(f"input is not G({m},{p},{n})-invariant (witness {res.witness})")
    F = A.field
    eps = unit_root(F, m, -(m // p) * sum(h.exponents))
    act = action_for(H, a)
    orbit = [a]
    for _ in range(p - 1):
        orbit.append(act.act(h, orbit[-1]))
    inv_p = F(Fraction(1, p))
    components = []
    for k in range(p):
        total = A.zero
        for j, hj in enumerate(orbit):
            total = total + hj * (eps ** (-k * j))
        components.append(total * inv_p)
    sums = sum(components, A.zero) == a
    eigen = [act.act(h, P) == P * eps ** k for k, P in enumerate(components)]
    L = WeylAlgebra(n, localized=True, field=F)
    quotients, poly, inv = [], [], []
    for k, P in enumerate(components):
        quot = _shift_x(P, L, -(m * k // p))
        quotients.append(quot)
        poly.append(all(x >= 0 for key in quot.terms for x in key[:n]))
        inv.append(bool(is_invariant(H, quot)))
    return DecompositionResult(m, p, n, h, eps, components, quotients, poly, inv, sums, eigen)
