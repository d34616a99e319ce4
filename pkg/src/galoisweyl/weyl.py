"""Weyl algebras ``A_n`` and their x-localizations in normal order.

Elements are sums ``c * x^alpha d^beta`` with all ``x`` to the left of all
``d``.  Products are normalized with the Leibniz rule

    d^b x^a = sum_k C(b, k) (a)_k x^(a-k) d^(b-k),

where ``(a)_k`` is the falling factorial; this holds for negative ``a``
too, which covers the localized algebra.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import polys
from .ratfunc import RationalFunction
from .scalars import CycNumber, Scalar, ScalarField
from .skewring import SkewContext, SkewElement, weyl_skew_context

__all__ = [
    "WeylAlgebra", "WeylElement", "WeylAutomorphism", "NotInSubalgebraError",
    "weyl_mul", "weyl_embed", "weyl_express_in_t",
]


class NotInSubalgebraError(ValueError):
    """Element does not lie in the commutative subalgebra generated by the ``t_i``."""


class WeylAlgebra:
    """``A_n`` over a scalar field; ``localized=True`` inverts ``x_1..x_n``."""

    def __init__(self, n, localized=False, field=None):
        if n < 1:
            raise ValueError("rank must be at least 1")
        self.n = n
        self.localized = bool(localized)
        self.field = field or ScalarField()
        self._skew = None

    def __eq__(self, other):
        if not isinstance(other, WeylAlgebra):
            return NotImplemented
        return (self.n, self.localized, self.field) == (other.n, other.localized, other.field)

    def __hash__(self):
        return hash((self.n, self.localized, self.field))

    def __repr__(self):
        kind = "localized Weyl algebra" if self.localized else "Weyl algebra"
        return f"<{kind} of rank {self.n} over {self.field}>"

    def _mono(self, alpha, beta, c=1):
        return WeylElement(self, {tuple(alpha) + tuple(beta): self.field(c)})

    def _unit(self, i):
        return tuple(int(j == i) for j in range(self.n))

    def __call__(self, c=0):
        return WeylElement(self, {(0,) * (2 * self.n): self.field(c)})

    @property
    def one(self):
        return self(1)

    @property
    def zero(self):
        return WeylElement(self, {})

    def x(self, i):
        """Generator ``x_i`` (1-based index)."""
        self._check_index(i)
        return self._mono(self._unit(i - 1), (0,) * self.n)

    def d(self, i):
        self._check_index(i)
        return self._mono((0,) * self.n, self._unit(i - 1))

    def xinv(self, i):
        self._check_index(i)
        if not self.localized:
            raise ValueError("negative exponent requires localized algebra")
        return self._mono(tuple(-x for x in self._unit(i - 1)), (0,) * self.n)

    def t(self, i):
        """``t_i = d_i x_i``."""
        return self.d(i) * self.x(i)

    def monomial(self, alpha, beta, c=1):
        if not self.localized and min(alpha) < 0:
            raise ValueError("negative exponent requires localized algebra")
        if min(beta) < 0:
            raise ValueError("derivative exponents must be nonnegative")
        return self._mono(alpha, beta, c)

    def _check_index(self, i):
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} out of range 1..{self.n}")

    def skew_context(self):
        """The standard target ``k(t_1..t_n) * Z^n`` for :func:`weyl_embed`."""
        if self._skew is None:
            self._skew = weyl_skew_context(self.n, self.field)
        return self._skew

    def t_context(self):
        return self.skew_context().base

    def from_t(self, f):
        """Evaluate a polynomial in ``t_1..t_n`` at ``t_i = d_i x_i``."""
        if isinstance(f, RationalFunction):
            if not f.is_polynomial():
                raise ValueError("only polynomials in t can be evaluated in the Weyl algebra")
            f = f.num
        out = self.zero
        ts = [self.t(i + 1) for i in range(self.n)]
        cache = {}
        for e, c in f.items():
            term = self(c)
            for i, k in enumerate(e):
                if k:
                    pw = cache.get((i, k))
                    if pw is None:
                        pw = cache[(i, k)] = ts[i] ** k
                    term = term * pw
            out = out + term
        return out


class WeylElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {k: c for k, c in terms.items() if c}

    def _coerce(self, other):
        if isinstance(other, WeylElement):
            if other.algebra != self.algebra:
                raise ValueError("Weyl elements from different algebras")
            return other
        if isinstance(other, (int, Fraction, CycNumber, Scalar)):
            return self.algebra(other)
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
        for k, c in o.terms.items():
            s = terms.get(k)
            s = c if s is None else s + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return WeylElement(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement(self.algebra, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return weyl_mul(self, other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return weyl_mul(self, o)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return weyl_mul(o, self)

    def scalar_value(self):
        """The :class:`Scalar` if the element is a constant, else ``None``."""
        if not self.terms:
            return self.algebra.field.zero
        if len(self.terms) == 1:
            (k, c), = self.terms.items()
            if not any(k):
                return c
        return None

    def inverse(self):
        """Inverse of a unit ``c * x^alpha`` (``alpha`` negative needs localization)."""
        if len(self.terms) == 1:
            (k, c), = self.terms.items()
            n = self.algebra.n
            alpha, beta = k[:n], k[n:]
            if not any(beta):
                if any(alpha) and not self.algebra.localized:
                    raise ValueError("negative exponent requires localized algebra")
                return self.algebra._mono(tuple(-a for a in alpha), beta, c.inverse())
        raise ValueError(f"{self} is not invertible in {self.algebra}")

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        s = o.scalar_value()
        if s is None:
            raise ValueError("can only divide by a nonzero scalar")
        return self * s.inverse()

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

    def sorted_terms(self):
        def key(item):
            k = item[0]
            return (sum(k), k)

        return sorted(self.terms.items(), key=key, reverse=True)

    def __str__(self):
        from .printing import fmt_scalar, format_terms
        n = self.algebra.n
        names = [f"x{i + 1}" for i in range(n)] + [f"d{i + 1}" for i in range(n)]

        def mono(k):
            parts = []
            for x, name in zip(k, names):
                if x == 1:
                    parts.append(name)
                elif x:
                    parts.append(f"{name}^{x}")
            return "*".join(parts)

        return format_terms(self.sorted_terms(), fmt_scalar, mono)

    def __repr__(self):
        return f"WeylElement({self})"


@lru_cache(maxsize=4096)
def _leibniz(b, a):
    """Pairs ``(k, C(b,k) * (a)_k)`` for ``d^b x^a``."""
    out = []
    ff = 1
    for k in range(b + 1):
        if k:
            ff *= a - k + 1
        if ff == 0:
            break
        out.append((k, comb(b, k) * ff))
    return tuple(out)


def weyl_mul(u, v):
    """Normal-ordered product ``u * v``."""
    if u.algebra != v.algebra:
        raise ValueError("Weyl elements from different algebras")
    alg = u.algebra
    n = alg.n
    out = {}
    for k1, c1 in u.terms.items():
        a1, b1 = k1[:n], k1[n:]
        for k2, c2 in v.terms.items():
            a2, b2 = k2[:n], k2[n:]
            c = c1 * c2
            per = [_leibniz(b1[i], a2[i]) for i in range(n)]
            for combo in itertools.product(*per):
                coef = 1
                alpha = []
                beta = []
                for i, (k, w) in enumerate(combo):
                    coef *= w
                    alpha.append(a1[i] + a2[i] - k)
                    beta.append(b1[i] + b2[i] - k)
                key = tuple(alpha) + tuple(beta)
                term = c * coef if coef != 1 else c
                s = out.get(key)
                out[key] = term if s is None else s + term
    return WeylElement(alg, out)


def _check_weyl_target(alg, target):
    if target is None:
        return alg.skew_context()
    std = alg.skew_context()
    if target.rank != alg.n or target.base.nvars != alg.n:
        raise ValueError("target skew context has the wrong shape")
    if target.base != std.base or target.shifts != std.shifts:
        # accept renamed/equal-field contexts only when shifts match the standard form
        if target.base.field != alg.field:
            raise ValueError("target skew context has a different scalar field")
        for i, s in enumerate(target.shifts):
            for j, img in enumerate(s.images):
                tj = target.base.var(target.base.names[j])
                if img != tj - int(i == j):
                    raise ValueError("target shifts are not t_j -> t_j - delta_ij")
    return target


@lru_cache(maxsize=4096)
def _shifted_rising(alpha_i, b):
    """Coefficients of ``prod_{j<b} (t + j - alpha_i)`` as ``{degree: int}``."""
    p = {0: 1}
    for j in range(b):
        c = j - alpha_i
        q = {}
        for d, v in p.items():
            q[d + 1] = q.get(d + 1, 0) + v
            q[d] = q.get(d, 0) + v * c
        p = {d: v for d, v in q.items() if v}
    return tuple(sorted(p.items()))


def weyl_embed(a, target: SkewContext | None = None) -> SkewElement:
    """Image under ``x_i -> e_i``, ``d_i -> t_i e_i^{-1}`` (``x_i^{-1} -> e_i^{-1}``)."""
    alg = a.algebra
    target = _check_weyl_target(alg, target)
    ctx = target.base
    n = alg.n
    out = {}
    for k, c in a.terms.items():
        alpha, beta = k[:n], k[n:]
        poly = {(0,) * n: c}
        for i in range(n):
            if beta[i]:
                factor = {}
                for d, v in _shifted_rising(alpha[i], beta[i]):
                    e = [0] * n
                    e[i] = d
                    factor[tuple(e)] = ctx.field(v)
                poly = polys.mul(poly, factor)
        v = tuple(x - y for x, y in zip(alpha, beta))
        f = RationalFunction(ctx, poly, ctx._one_poly())
        g = out.get(v)
        out[v] = f if g is None else g + f
    return SkewElement(target, out)


_T_POWER_CACHE = {}


def _t_monomial(alg, gamma):
    key = (alg, gamma)
    r = _T_POWER_CACHE.get(key)
    if r is None:
        r = alg.one
        for i, g in enumerate(gamma):
            if g:
                r = r * alg.t(i + 1) ** g
        _T_POWER_CACHE[key] = r
    return r


def weyl_express_in_t(a) -> RationalFunction:
    """The polynomial ``P`` with ``P(t_1..t_n) = a``.

    Triangular elimination: the normal form of ``t^g`` has leading term
    ``x^g d^g``, so peeling off the top-degree term determines the
    coefficients one at a time.
    """
    alg = a.algebra
    n = alg.n
    ctx = alg.t_context()
    image = weyl_embed(a)
    if image and set(image.terms) != {(0,) * n}:
        raise NotInSubalgebraError(f"{a} has support {sorted(image.terms)}, not {{0}}")
    rest = a
    poly = {}
    while rest:
        k, c = max(rest.terms.items(), key=lambda kc: (sum(kc[0]), kc[0]))
        alpha, beta = k[:n], k[n:]
        if alpha != beta or min(alpha) < 0:
            raise NotInSubalgebraError(f"term {k} is not balanced")
        poly[alpha] = c
        rest = rest - _t_monomial(alg, alpha) * c
    return RationalFunction(ctx, poly, ctx._one_poly())


class WeylAutomorphism:
    """Algebra automorphism given by images of ``x_i``, ``d_i`` (and ``x_i^{-1}``)."""

    def __init__(self, algebra, x_images, d_images, xinv_images=None, check=True):
        self.algebra = algebra
        self.x_images = tuple(x_images)
        self.d_images = tuple(d_images)
        if xinv_images is None and algebra.localized:
            xinv_images = [img.inverse() for img in self.x_images]
        self.xinv_images = tuple(xinv_images) if xinv_images is not None else None
        self._power_cache = {}
        self._perm = self._monomial_data()
        self._local = None if self._perm is not None else self._local_data()
        self._factor_cache = {}
        if check:
            bad = self.relation_failures()
            if bad:
                raise ValueError(f"images violate defining relations: {bad[0]}")

    def _monomial_data(self):
        # (target index, scalar) per generator when every image is c * generator
        n = self.algebra.n
        data = []
        for imgs, offset in ((self.x_images, 0), (self.d_images, n)):
            for img in imgs:
                if len(img.terms) != 1:
                    return None
                (k, c), = img.terms.items()
                nz = [j for j, x in enumerate(k) if x]
                if len(nz) != 1 or k[nz[0]] != 1 or not offset <= nz[0] < offset + n:
                    return None
                data.append((nz[0] - offset, c))
        return data

    def _local_data(self):
        # target coordinate per generator when generator j only involves coordinate tgt(j)
        n = self.algebra.n
        targets = []
        for j in range(n):
            imgs = [self.x_images[j], self.d_images[j]]
            if self.xinv_images is not None:
                imgs.append(self.xinv_images[j])
            used = set()
            for img in imgs:
                for k in img.terms:
                    used.update(i % n for i, x in enumerate(k) if x)
            if len(used) > 1:
                return None
            targets.append(used.pop() if used else None)
        if None in targets or len(set(targets)) != n:
            return None
        return targets

    def _factor(self, j, a, b):
        key = (j, a, b)
        f = self._factor_cache.get(key)
        if f is None:
            f = self.algebra.one
            if a > 0:
                f = f * self._gen_power("x", j, a)
            elif a < 0:
                f = f * self._gen_power("X", j, -a)
            if b:
                f = f * self._gen_power("d", j, b)
            f = self._factor_cache[key] = f
        return f

    def relation_failures(self):
        alg = self.algebra
        n = alg.n
        bad = []
        X, D = self.x_images, self.d_images
        for i in range(n):
            for j in range(n):
                if D[i] * X[j] - X[j] * D[i] != alg(int(i == j)):
                    bad.append(f"[d{i + 1}, x{j + 1}]")
                if j > i:
                    if X[i] * X[j] != X[j] * X[i]:
                        bad.append(f"[x{i + 1}, x{j + 1}]")
                    if D[i] * D[j] != D[j] * D[i]:
                        bad.append(f"[d{i + 1}, d{j + 1}]")
            if alg.localized and X[i] * self.xinv_images[i] != alg.one:
                bad.append(f"x{i + 1} * x{i + 1}^-1")
        return bad

    def _gen_power(self, kind, i, k):
        key = (kind, i, k)
        r = self._power_cache.get(key)
        if r is None:
            base = {"x": self.x_images, "d": self.d_images, "X": self.xinv_images}[kind][i]
            r = self._power_cache[key] = base ** k
        return r

    def __call__(self, a):
        alg = self.algebra
        if a.algebra != alg:
            raise ValueError("automorphism of a different algebra")
        n = alg.n
        if self._perm is not None:
            out = {}
            for k, c in a.terms.items():
                new = [0] * (2 * n)
                coef = c
                for j in range(2 * n):
                    e = k[j]
                    if e:
                        tgt, s = self._perm[j]
                        off = 0 if j < n else n
                        new[off + tgt] = e
                        coef = coef * (s ** e)
                key = tuple(new)
                prev = out.get(key)
                out[key] = coef if prev is None else prev + coef
            return WeylElement(alg, out)
        if self._local is not None:
            # factors live in disjoint coordinates, so their product is an outer product
            out = {}
            zero = (0,) * (2 * n)
            for k, c in a.terms.items():
                acc = {zero: c}
                for j in range(n):
                    if k[j] or k[n + j]:
                        f = self._factor(j, k[j], k[n + j]).terms
                        acc = {tuple(x + y for x, y in zip(e1, e2)): c1 * c2
                               for e1, c1 in acc.items() for e2, c2 in f.items()}
                for e, c2 in acc.items():
                    prev = out.get(e)
                    out[e] = c2 if prev is None else prev + c2
            return WeylElement(alg, out)
        out = alg.zero
        for k, c in a.terms.items():
            alpha, beta = k[:n], k[n:]
            img = alg(c)
            for i in range(n):
                if alpha[i] > 0:
                    img = img * self._gen_power("x", i, alpha[i])
                elif alpha[i] < 0:
                    img = img * self._gen_power("X", i, -alpha[i])
            for i in range(n):
                if beta[i]:
                    img = img * self._gen_power("d", i, beta[i])
            out = out + img
        return out

    def compose(self, other):
        """``self o other``."""
        xinv = [self(img) for img in other.xinv_images] if other.xinv_images else None
        return WeylAutomorphism(self.algebra, [self(i) for i in other.x_images],
                                [self(i) for i in other.d_images], xinv, check=False)

    def is_identity(self):
        alg = self.algebra
        return (all(img == alg.x(i + 1) for i, img in enumerate(self.x_images))
                and all(img == alg.d(i + 1) for i, img in enumerate(self.d_images)))

    def __eq__(self, other):
        if not isinstance(other, WeylAutomorphism):
            return NotImplemented
        return self.x_images == other.x_images and self.d_images == other.d_images
