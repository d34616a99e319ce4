"""Generalized Weyl algebras ``D(a, sigma)`` of arbitrary rank.

An element is a finite sum ``d_v X^v`` with ``d_v`` in the base ring ``D``
and ``X^v = prod_i (X_i^{sign v_i})^{|v_i|}``.  Products are brought to
normal form by pushing coefficients left (``X_i^+ d = sigma_i(d) X_i^+``)
and contracting opposite powers one coordinate at a time.  The embedding
``X_i^+ -> e_i``, ``X_i^- -> a_i e_i^{-1}`` into ``Frac D * Z^n`` serves as
the independent oracle for that rule.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .ratfunc import FieldAutomorphism, RationalFunction, VariableContext
from .scalars import ScalarField
from .skewring import SkewContext, SkewElement

__all__ = [
    "GwaAlgebra", "GwaElement", "AxiomCheck", "AxiomReport", "InvariantsCertificate",
    "gwa_mul", "gwa_embed", "gwa_check_axioms", "gwa_tensor", "gwa_instance",
    "gwa_from_invariants", "CATALOG", "NotInBaseRingError", "cyclic_invariant", "uqsl2",
    "witten1", "woronowicz", "trivial_gwa", "pull_back",
]


class NotInBaseRingError(ValueError):
    """A GWA coefficient lies in ``Frac D`` but not in ``D``."""


class GwaAlgebra:
    """``D(a, sigma)``: ``base`` is the variable context of ``D``.

    ``notes`` carries free-text remarks (e.g. deviations from printed data)
    that reports pass through unchanged.
    """

    def __init__(self, base: VariableContext, a, sigma, name=None, notes=()):
        self.base = base
        self.a = tuple(base(x) if not isinstance(x, RationalFunction) else x for x in a)
        self.sigma = tuple(sigma)
        if len(self.a) != len(self.sigma):
            raise ValueError("a and sigma must have the same length")
        for s in self.sigma:
            if s.context != base:
                raise ValueError("sigma acts on a different context")
        for x in self.a:
            if x.context != base:
                raise ValueError("a_i lives in a different context")
        self.name = name or "D(a,sigma)"
        self.notes = tuple(notes)
        self._skew = None
        self._apow = {}

    @property
    def n(self):
        return len(self.a)

    @property
    def field(self):
        return self.base.field

    def __eq__(self, other):
        if not isinstance(other, GwaAlgebra):
            return NotImplemented
        return (self is other
                or (self.base == other.base and self.a == other.a and self.sigma == other.sigma))

    def __hash__(self):
        return hash((self.base, self.a))

    def __repr__(self):
        return f"<GWA {self.name} of rank {self.n} over {self.base}>"

    # -- elements ---------------------------------------------------------
    def __call__(self, d=0):
        if not isinstance(d, RationalFunction):
            d = self.base(d)
        return GwaElement(self, {(0,) * self.n: d})

    @property
    def one(self):
        return self(1)

    @property
    def zero(self):
        return GwaElement(self, {})

    def var(self, name):
        return self(self.base.var(name))

    def X(self, i, sign, power=1):
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 1..{self.n}")
        v = [0] * self.n
        v[i - 1] = power if sign > 0 else -power
        return GwaElement(self, {tuple(v): self.base.one})

    def Xp(self, i):
        return self.X(i, +1)

    def Xm(self, i):
        return self.X(i, -1)

    def monomial(self, v, d=1):
        if not isinstance(d, RationalFunction):
            d = self.base(d)
        return GwaElement(self, {tuple(v): d})

    # -- structure ----------------------------------------------------------
    def skew_context(self):
        """``Frac D * Z^n`` with ``e_i`` acting by ``sigma_i``."""
        if self._skew is None:
            self._skew = SkewContext(self.base, self.sigma, check=False)
        return self._skew

    def shifted_a(self, i, k):
        """``sigma_i^k(a_i)`` (cached)."""
        key = (i, k)
        r = self._apow.get(key)
        if r is None:
            r = self._apow[key] = self.sigma[i].power(k)(self.a[i])
        return r

    def sigma_a(self, i):
        return self.shifted_a(i, 1)


class GwaElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms, check=True):
        self.algebra = algebra
        clean = {}
        for v, d in terms.items():
            if not d:
                continue
            if check and not d.in_base_ring():
                raise NotInBaseRingError(f"coefficient {d} is not in the base ring")
            clean[tuple(v)] = d
        self.terms = clean

    def _coerce(self, other):
        if isinstance(other, GwaElement):
            if other.algebra != self.algebra:
                raise ValueError("GWA elements from different algebras")
            return other
        try:
            return self.algebra(other)
        except (TypeError, ValueError):
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
        for v, d in o.terms.items():
            cur = terms.get(v)
            terms[v] = d if cur is None else cur + d
        return GwaElement(self.algebra, terms, check=False)

    __radd__ = __add__

    def __neg__(self):
        return GwaElement(self.algebra, {v: -d for v, d in self.terms.items()}, check=False)

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
        return gwa_mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return gwa_mul(o, self)

    def inverse(self):
        """Inverse of a unit of the base ring (e.g. ``h`` over ``C[c,h,h^-1]``)."""
        if not self.terms:
            raise ZeroDivisionError("inverse of zero")
        if len(self.terms) == 1:
            (v, d), = self.terms.items()
            if not any(v):
                inv = d.inverse()
                if inv.in_base_ring():
                    return GwaElement(self.algebra, {v: inv}, check=False)
        raise ValueError(f"{self} is not a unit of the base ring")

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.algebra.one, self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def coefficient(self, v):
        return self.terms.get(tuple(v), self.algebra.base.zero)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        from .printing import fmt_ratfunc, format_terms
        return format_terms(self.sorted_terms(), fmt_ratfunc, _x_monomial)

    def __repr__(self):
        return f"GwaElement({self})"


def _x_monomial(v):
    parts = []
    for i, k in enumerate(v):
        if k:
            name = f"X{'p' if k > 0 else 'm'}{i + 1}"
            parts.append(name if abs(k) == 1 else f"{name}^{abs(k)}")
    return "*".join(parts)


def _contraction(alg, i, p, q):
    """Coefficient ``c`` with ``X_i^p X_i^q = c X_i^{p+q}`` (signed exponents)."""
    if p >= 0 and q >= 0 or p <= 0 and q <= 0:
        return None
    c = alg.base.one
    if p > 0:
        # (X^+)^p (X^-)^|q|: innermost X^+X^- = sigma(a), pushed left through X^+'s
        for k in range(min(p, -q)):
            c = c * alg.shifted_a(i, p - k)
    else:
        # (X^-)^|p| (X^+)^q: innermost X^-X^+ = a, pushed left through X^-'s
        pp = -p
        for k in range(min(pp, q)):
            c = c * alg.shifted_a(i, -(pp - 1 - k))
    return c


def gwa_mul(u, v):
    """Normal-form product of two GWA elements."""
    if u.algebra != v.algebra:
        raise ValueError("GWA elements from different algebras")
    alg = u.algebra
    skew = alg.skew_context()
    out = {}
    for s, d1 in u.terms.items():
        sigma = skew.shift(s) if any(s) else None
        for w, d2 in v.terms.items():
            c = d1 * (sigma(d2) if sigma is not None else d2)
            for i in range(alg.n):
                k = _contraction(alg, i, s[i], w[i])
                if k is not None:
                    c = c * k
            key = tuple(x + y for x, y in zip(s, w))
            cur = out.get(key)
            out[key] = c if cur is None else cur + c
    return GwaElement(alg, out, check=False)


def gwa_embed(u, target=None) -> SkewElement:
    """Image under ``X_i^+ -> e_i``, ``X_i^- -> a_i e_i^{-1}``."""
    alg = u.algebra
    std = alg.skew_context()
    if target is None:
        target = std
    elif target.base != alg.base or target.shifts != alg.sigma:
        raise ValueError("target shifts differ from the algebra's sigma")
    # powers of the generator images are reused across calls for the standard target
    if target is std:
        cache = alg.__dict__.setdefault("_embed_powers", {})
    else:
        cache = {}

    def gen_power(i, k):
        r = cache.get((i, k))
        if r is None:
            e = [0] * alg.n
            e[i] = 1 if k > 0 else -1
            g = SkewElement(target, {tuple(e): alg.base.one if k > 0 else alg.a[i]})
            r = cache[(i, k)] = g ** abs(k)
        return r

    out = target.zero
    for v, d in u.terms.items():
        img = target.coeff(d)
        for i, k in enumerate(v):
            if k:
                img = img * gen_power(i, k)
        out = out + img
    return out


# ---------------------------------------------------------------------------
# axioms


@dataclass
class AxiomCheck:
    name: str
    passed: bool
    witness: object = None
    detail: str = ""

    def to_json(self):
        return {"name": self.name, "verdict": "pass" if self.passed else "fail",
                "witness": _jsonable(self.witness), "detail": self.detail}


@dataclass
class AxiomReport:
    algebra: str
    checks: list
    bound: int
    notes: tuple = ()

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def check(self, name):
        return next(c for c in self.checks if c.name == name)

    def to_json(self):
        return {"algebra": self.algebra, "bound": self.bound,
                "verdict": "pass" if self.passed else "fail",
                "checks": [c.to_json() for c in self.checks], "notes": list(self.notes)}


def _jsonable(x):
    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [_jsonable(y) for y in x]
    return str(x)


def gwa_check_axioms(alg: GwaAlgebra, bound=3) -> AxiomReport:
    """Check the defining hypotheses of ``D(a, sigma)``; failures carry witnesses.

    Linear independence of the ``sigma_i`` over ``Z`` is searched over
    exponent vectors of sup-norm at most ``bound``.
    """
    base = alg.base
    n = alg.n
    checks = []

    bad = None
    for i, s in enumerate(alg.sigma):
        if not s.verify():
            bad = (i + 1, str(s.jacobian_determinant()))
            break
    checks.append(AxiomCheck("sigma_invertible", bad is None, bad,
                             "" if bad is None else
                             f"sigma_{bad[0]} has no inverse; Jacobian determinant {bad[1]}"))
    invertible = bad is None

    bad = None
    for i, s in enumerate(alg.sigma):
        if not s.maps_ring_into_ring() or (invertible and not s.inverse().maps_ring_into_ring()):
            bad = i + 1
            break
    checks.append(AxiomCheck("sigma_preserves_ring", bad is None, bad))

    bad = None
    for i, j in itertools.combinations(range(n), 2):
        si, sj = alg.sigma[i], alg.sigma[j]
        for name in base.names:
            x = base.var(name)
            if si(sj(x)) != sj(si(x)):
                bad = (i + 1, j + 1, name)
                break
        if bad:
            break
    checks.append(AxiomCheck("sigma_commute", bad is None, bad))

    bad = None
    for i in range(n):
        for j in range(n):
            if i != j and alg.sigma[i](alg.a[j]) != alg.a[j]:
                bad = (i + 1, j + 1)
                break
        if bad:
            break
    checks.append(AxiomCheck("a_fixed_off_diagonal", bad is None, bad))

    bad = None
    for i, a in enumerate(alg.a):
        if not a or not a.in_base_ring():
            bad = i + 1
            break
    checks.append(AxiomCheck("a_nonzero_in_ring", bad is None, bad))

    if invertible:
        wit = _dependence_witness(alg, bound)
        checks.append(AxiomCheck("sigma_linearly_independent", wit is None, wit,
                                 f"searched exponent vectors with |w_i| <= {bound}"))
    else:
        checks.append(AxiomCheck("sigma_linearly_independent", False, None,
                                 "not decidable: some sigma_i is not invertible"))

    bad = _relation_failure(alg, invertible)
    checks.append(AxiomCheck("relations_via_embedding", bad is None, bad,
                             "X^-X^+ = a, X^+X^- = sigma(a), X^+ d = sigma(d) X^+ in Frac D * Z^n"))
    return AxiomReport(alg.name, checks, bound, alg.notes)


def _dependence_witness(alg, bound):
    skew = alg.skew_context()
    gens = alg.base.gens()
    for w in itertools.product(range(-bound, bound + 1), repeat=alg.n):
        first = next((x for x in w if x), 0)
        if first <= 0:
            continue
        s = skew.shift(w)
        if all(s(g) == g for g in gens):
            return w
    return None


def _relation_failure(alg, invertible):
    try:
        for i in range(alg.n):
            xp, xm = gwa_embed(alg.Xp(i + 1)), gwa_embed(alg.Xm(i + 1))
            skew = alg.skew_context()
            if xm * xp != skew.coeff(alg.a[i]):
                return f"X{i + 1}^- X{i + 1}^+"
            if xp * xm != skew.coeff(alg.sigma[i](alg.a[i])):
                return f"X{i + 1}^+ X{i + 1}^-"
            for name in alg.base.names:
                d = skew.coeff(alg.base.var(name))
                if xp * d != skew.coeff(alg.sigma[i](alg.base.var(name))) * xp:
                    return f"X{i + 1}^+ {name}"
                if invertible and xm * d != skew.coeff(alg.sigma[i].inverse()(alg.base.var(name))) * xm:
                    return f"X{i + 1}^- {name}"
    except ValueError as exc:
        return f"embedding unavailable: {exc}"
    return None


# ---------------------------------------------------------------------------
# tensor products


def _fresh(name, taken):
    m = re.fullmatch(r"(.*?)(\d+)", name)
    stem, k = (m.group(1), int(m.group(2))) if m else (name, 1)
    while True:
        k += 1
        cand = f"{stem}{k}"
        if cand not in taken:
            return cand


def _lift(f, ctx, index):
    """Re-express ``f`` in ``ctx``; ``index[i]`` is the new position of variable ``i``."""
    def conv(p):
        out = {}
        for e, c in p.items():
            new = [0] * ctx.nvars
            for i, x in enumerate(e):
                new[index[i]] = x
            out[tuple(new)] = ctx.field(c)
        return out

    num = conv(f.num)
    if not num:
        return ctx.zero
    return RationalFunction._make(ctx, num, conv(f.den))


def gwa_tensor(A: GwaAlgebra, B: GwaAlgebra) -> GwaAlgebra:
    """``A (x) B`` over the joint base; colliding names in ``B`` are renamed."""
    F = A.field.join(B.field)
    taken = set(A.base.names) | set(F.parameters)
    renamed = []
    for name in B.base.names:
        new = name if name not in taken else _fresh(name, taken | set(B.base.names))
        taken.add(new)
        renamed.append(new)
    if set(A.base.names) & set(F.parameters) or set(renamed) & set(F.parameters):
        raise ValueError("variable names clash with scalar parameters")
    ctx = VariableContext(A.base.names + tuple(renamed), A.base.laurent + B.base.laurent, F)
    ia = list(range(A.base.nvars))
    ib = [A.base.nvars + j for j in range(B.base.nvars)]

    def lift_auto(s, index, own):
        imgs = [ctx.var(v) for v in ctx.names]
        inv = [ctx.var(v) for v in ctx.names]
        for j, pos in enumerate(own):
            imgs[pos] = _lift(s.images[j], ctx, index)
            if s.has_inverse:
                inv[pos] = _lift(s.inverse().images[j], ctx, index)
        return FieldAutomorphism(ctx, imgs, inv if s.has_inverse else None)

    a = [_lift(x, ctx, ia) for x in A.a] + [_lift(x, ctx, ib) for x in B.a]
    sigma = ([lift_auto(s, ia, ia) for s in A.sigma]
             + [lift_auto(s, ib, ib) for s in B.sigma])
    name = A.name if B.n == 0 and not B.base.nvars else (
        B.name if A.n == 0 and not A.base.nvars else f"{A.name} (x) {B.name}")
    return GwaAlgebra(ctx, a, sigma, name, A.notes + B.notes)


def trivial_gwa(field=None):
    """Rank-0 GWA over the scalars (unit for :func:`gwa_tensor`)."""
    return GwaAlgebra(VariableContext((), field=field or ScalarField()), [], [], "trivial")


# ---------------------------------------------------------------------------
# catalog


def _rising_in_t(m):
    """``d^m x^m`` in ``A_1`` expressed in ``t`` (normal-ordering oracle)."""
    from .weyl import WeylAlgebra, weyl_express_in_t
    A = WeylAlgebra(1)
    return weyl_express_in_t(A.d(1) ** m * A.x(1) ** m)


def _printed_cyclic_a(m, H):
    a = H * (m ** m)
    for j in range(1, m):
        a = a * (H - Fraction(j, m))
    return a


def cyclic_invariant(m=2, n=1):
    """``A_n^m`` as a GWA over ``k[H_1..H_n]`` with ``sigma_i(H_i) = H_i - 1``.

    ``a_i`` is obtained by normal-ordering ``d^m x^m`` and substituting
    ``t = m H``; it equals ``m^m H (H + 1/m) ... (H + (m-1)/m)``.
    """
    if m < 1 or n < 1:
        raise ValueError("cyclic_invariant needs m >= 1 and n >= 1")
    ctx = VariableContext(tuple(f"H{i + 1}" for i in range(n)))
    poly_t = _rising_in_t(m)
    a, sigma = [], []
    notes = []
    for i in range(n):
        H = ctx.var(f"H{i + 1}")
        ai = poly_t.subs([H * m])
        a.append(ai)
        sigma.append(FieldAutomorphism.from_dict(ctx, {f"H{i + 1}": H - 1}, {f"H{i + 1}": H + 1}))
    printed = _printed_cyclic_a(m, ctx.var("H1"))
    if printed != a[0]:
        notes.append(
            f"a_i derived by normal ordering is {a[0]} (with H = H1); the printed product "
            f"m^m H(H-1/m)...(H-(m-1)/m) expands to {printed}, which differs in sign of the shifts")
    return GwaAlgebra(ctx, a, sigma, f"cyclic_invariant(m={m},n={n})", tuple(notes))


def uqsl2():
    F = ScalarField(1, ("q",))
    ctx = VariableContext(("c", "h"), (False, True), F)
    q = F.param("q")
    c, h = ctx.var("c"), ctx.var("h")
    a = c + (h ** 2 / (q ** 2 - 1) - h ** -2 / (q ** -2 - 1)) / (q - q.inverse())
    sigma = FieldAutomorphism.from_dict(ctx, {"h": h * q}, {"h": h / q})
    return GwaAlgebra(ctx, [a], [sigma], "uqsl2")


def witten1():
    F = ScalarField(1, ("p",))
    ctx = VariableContext(("C", "H"), field=F)
    p = F.param("p")
    C, H = ctx.var("C"), ctx.var("H")
    a = C - H * (H - 1) / (p + p.inverse())
    sigma = FieldAutomorphism.from_dict(ctx, {"H": (H - 1) * p ** 2}, {"H": H / p ** 2 + 1})
    return GwaAlgebra(ctx, [a], [sigma], "witten1")


WORONOWICZ_NOTE = (
    "printed data gives sigma(Z) = s^2 H, which is not invertible on C[H,Z] "
    "(Jacobian determinant 0); the default variant uses sigma(Z) = s^2 Z")
ALPHA_NOTE = "alpha is read as -1/(s(1 - s^2)); the printed grouping is ambiguous"


def woronowicz(variant="corrected"):
    F = ScalarField(1, ("s",))
    ctx = VariableContext(("H", "Z"), field=F)
    s = F.param("s")
    H, Z = ctx.var("H"), ctx.var("Z")
    alpha = -(s * (1 - s ** 2)).inverse()
    beta = s / (1 - s ** 4)
    a = Z + H * alpha + beta
    if variant == "corrected":
        sigma = FieldAutomorphism.from_dict(ctx, {"H": H * s ** 4, "Z": Z * s ** 2},
                                            {"H": H / s ** 4, "Z": Z / s ** 2})
    elif variant == "printed":
        sigma = FieldAutomorphism(ctx, [H * s ** 4, H * s ** 2])
    else:
        raise ValueError(f"unknown woronowicz variant {variant!r}")
    return GwaAlgebra(ctx, [a], [sigma], f"woronowicz({variant})", (WORONOWICZ_NOTE, ALPHA_NOTE))


CATALOG = {
    "cyclic_invariant": cyclic_invariant,
    "uqsl2": uqsl2,
    "witten1": witten1,
    "woronowicz": woronowicz,
}


def gwa_instance(name, **params) -> GwaAlgebra:
    """Build a catalog algebra: ``cyclic_invariant(m, n)``, ``uqsl2``,
    ``witten1`` or ``woronowicz(variant)``."""
    try:
        build = CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown GWA catalog key {name!r}; known: {sorted(CATALOG)}") from None
    try:
        return build(**params)
    except TypeError as exc:
        raise ValueError(f"invalid parameters for {name}: {exc}") from None


# ---------------------------------------------------------------------------
# the invariant subalgebra A_n^m as a GWA


@dataclass
class InvariantsCertificate:
    m: int
    n: int
    generators: dict
    a_derived: list
    a_printed: list
    printed_matches: bool
    pairs_checked: int
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {"m": self.m, "n": self.n, "generators": self.generators,
                "a_derived": self.a_derived, "a_printed": self.a_printed,
                "printed_matches": self.printed_matches, "pairs_checked": self.pairs_checked,
                "verdict": "pass" if self.passed else "fail",
                "failures": [list(f) for f in self.failures]}


def pull_back(u, weyl_algebra, m):
    """``psi``: ``X_i^- -> d_i^m``, ``X_i^+ -> x_i^m``, ``H_i -> t_i/m``."""
    W = weyl_algebra
    out = W.zero
    tctx = W.t_context()
    images = [tctx.var(f"t{i + 1}") / m for i in range(W.n)]
    for v, d in u.terms.items():
        coeff = W.from_t(d.subs(images))
        mono = W.one
        for i, k in enumerate(v):
            if k > 0:
                mono = mono * W.x(i + 1) ** (m * k)
            elif k < 0:
                mono = mono * W.d(i + 1) ** (-m * k)
        out = out + coeff * mono
    return out


def gwa_from_invariants(m, n) -> InvariantsCertificate:
    """Verify ``d_i^m -> X_i^-``, ``x_i^m -> X_i^+``, ``t_i -> m H_i`` on all generator pairs."""
    from .weyl import WeylAlgebra, weyl_express_in_t
    if m < 1 or n < 1:
        raise ValueError("need m >= 1 and n >= 1")
    G = cyclic_invariant(m, n)
    W = WeylAlgebra(n)
    pairs = []
    for i in range(n):
        pairs.append((f"d{i + 1}^{m}", W.d(i + 1) ** m, G.Xm(i + 1)))
        pairs.append((f"t{i + 1}", W.t(i + 1), G.var(f"H{i + 1}") * m))
        pairs.append((f"x{i + 1}^{m}", W.x(i + 1) ** m, G.Xp(i + 1)))
    failures = []
    checked = 0
    for (na, wa, ga), (nb, wb, gb) in itertools.product(pairs, repeat=2):
        checked += 1
        wprod = wa * wb
        gprod = ga * gb
        if pull_back(gprod, W, m) != wprod:
            failures.append((na, nb))
            continue
        if set(gprod.terms) <= {(0,) * n}:
            # balanced product: compare as polynomials in t
            expected = gprod.coefficient((0,) * n).subs(
                [W.t_context().var(f"t{i + 1}") / m for i in range(n)])
            if weyl_express_in_t(wprod) != expected:
                failures.append((na, nb))
    printed = _printed_cyclic_a(m, G.base.var("H1"))
    generators = {}
    for i in range(n):
        generators[f"d{i + 1}^{m}"] = f"Xm{i + 1}"
        generators[f"x{i + 1}^{m}"] = f"Xp{i + 1}"
        generators[f"t{i + 1}"] = str(G.var(f"H{i + 1}") * m)
    return InvariantsCertificate(
        m, n, generators, [str(x) for x in G.a],
        [str(_printed_cyclic_a(m, G.base.var(f"H{i + 1}"))) for i in range(n)],
        printed == G.a[0], checked, failures)
