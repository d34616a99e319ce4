"""Sparse multivariate polynomials stored as plain dicts.

A polynomial in ``k`` variables is a ``dict`` mapping exponent tuples of
length ``k`` to nonzero coefficients.  Coefficients may be any exact field
element supporting ``+ - * /`` and truth testing (``Fraction``,
:class:`~galoisweyl.scalars.CycNumber`, :class:`~galoisweyl.scalars.Scalar`).

Everything here is a pure function on dicts; callers never mutate a dict
they did not create.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd as _igcd, lcm as _ilcm

__all__ = [
    "grlex_key", "leading", "add", "sub", "neg", "scale", "mul", "mul_term",
    "power", "divexact", "monic", "gcd", "is_monomial", "constant", "degree_in",
    "compose",
]


def grlex_key(e):
    return (sum(e), e)


def leading(p):
    """Leading (exponent, coefficient) under graded lexicographic order."""
    e = max(p, key=grlex_key)
    return e, p[e]


def constant(c, k):
    return {(0,) * k: c} if c else {}


def is_monomial(p):
    return len(p) == 1


def add(p, q):
    if len(p) < len(q):
        p, q = q, p
    r = dict(p)
    for e, c in q.items():
        s = r.get(e)
        if s is None:
            r[e] = c
        else:
            s = s + c
            if s:
                r[e] = s
            else:
                del r[e]
    return r


def neg(p):
    return {e: -c for e, c in p.items()}


def sub(p, q):
    r = dict(p)
    for e, c in q.items():
        s = r.get(e)
        if s is None:
            r[e] = -c
        else:
            s = s - c
            if s:
                r[e] = s
            else:
                del r[e]
    return r


def scale(p, c):
    if not c:
        return {}
    return {e: v * c for e, v in p.items()}


def mul_term(p, m, c):
    """``p * c * x^m``."""
    out = {}
    for e, v in p.items():
        w = v * c
        if w:
            out[tuple(a + b for a, b in zip(e, m))] = w
    return out


def mul(p, q):
    if not p or not q:
        return {}
    if len(p) < len(q):
        p, q = q, p
    if len(q) == 1:
        (m, c), = q.items()
        return mul_term(p, m, c)
    r = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            s = r.get(e)
            r[e] = c1 * c2 if s is None else s + c1 * c2
    return {e: c for e, c in r.items() if c}


def power(p, n, k):
    if n < 0:
        raise ValueError("negative power of a polynomial")
    result = {(0,) * k: _one(p)} if p else ({(0,) * k: 1} if n == 0 else {})
    if n == 0:
        return result
    base = p
    while n:
        if n & 1:
            result = mul(result, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return result


def _one(p):
    c = next(iter(p.values()))
    return c / c


def monic(p):
    if not p:
        return {}
    _, lc = leading(p)
    inv = _one(p) / lc
    return {e: c * inv for e, c in p.items()}


def divexact(a, b):
    """Exact quotient ``a / b``; raises ``ArithmeticError`` if ``b`` does not divide ``a``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    eb, cb = leading(b)
    if len(b) == 1:
        out = {}
        for e, c in a.items():
            d = tuple(x - y for x, y in zip(e, eb))
            if min(d, default=0) < 0:
                raise ArithmeticError("inexact polynomial division")
            out[d] = c / cb
        return out
    q = {}
    r = dict(a)
    while r:
        e, c = leading(r)
        d = tuple(x - y for x, y in zip(e, eb))
        if min(d, default=0) < 0:
            raise ArithmeticError("inexact polynomial division")
        f = c / cb
        q[d] = f
        r = sub(r, mul_term(b, d, f))
    return q


def degree_in(p, i):
    return max((e[i] for e in p), default=-1)


def _min_exponents(p):
    it = iter(p)
    m = list(next(it))
    for e in it:
        for j, x in enumerate(e):
            if x < m[j]:
                m[j] = x
    return tuple(m)


def _shift(p, m, sign=-1):
    return {tuple(a + sign * b for a, b in zip(e, m)): c for e, c in p.items()}


def gcd(a, b, k):
    """Monic gcd over the coefficient field, normalized under graded lex."""
    if not a:
        return monic(b)
    if not b:
        return monic(a)
    one = _one(a)
    if k == 0:
        return {(): one}
    ma, mb = _min_exponents(a), _min_exponents(b)
    m = tuple(min(x, y) for x, y in zip(ma, mb))
    a1 = _shift(a, ma) if any(ma) else a
    b1 = _shift(b, mb) if any(mb) else b
    zero = (0,) * k
    if len(a1) == 1 or len(b1) == 1:
        g = {zero: one}
    elif k == 1:
        g = _gcd_univariate(a1, b1)
    else:
        g = _gcd_recursive(a1, b1, k)
    if any(m):
        g = _shift(g, m, +1)
    return monic(g)


def _rational(p):
    return all(type(c) is Fraction or type(c) is int for c in p.values())


def _int_primitive(u):
    # dense list of ints, content removed, positive leading coefficient
    g = reduce(_igcd, u)
    if u[-1] < 0:
        g = -g
    return [c // g for c in u]


def _gcd_univariate_q(a, b):
    """Primitive remainder sequence over Z for rational coefficients."""
    def dense(p):
        den = reduce(_ilcm, (Fraction(c).denominator for c in p.values()), 1)
        out = [0] * (max(e[0] for e in p) + 1)
        for e, c in p.items():
            c = Fraction(c) * den
            out[e[0]] = c.numerator
        return _int_primitive(out)

    u, v = dense(a), dense(b)
    if len(u) < len(v):
        u, v = v, u
    while len(v) > 1:
        lv = v[-1]
        dv = len(v) - 1
        r = list(u)
        while len(r) - 1 >= dv and r:
            lr = r[-1]
            off = len(r) - 1 - dv
            r = [c * lv for c in r]
            for j, c in enumerate(v):
                r[off + j] -= lr * c
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        if not r:
            break
        u, v = v, _int_primitive(r)
    else:
        return {(0,): Fraction(1)}
    lc = v[-1]
    return {(j,): Fraction(c, lc) for j, c in enumerate(v) if c}


def _gcd_univariate(a, b):
    if _rational(a) and _rational(b):
        return _gcd_univariate_q(a, b)

    def dense(p):
        out = [0] * (max(e[0] for e in p) + 1)
        for e, c in p.items():
            out[e[0]] = c
        return out

    def rem(u, v):
        u = list(u)
        lv = v[-1]
        while len(u) >= len(v):
            f = u[-1] / lv
            off = len(u) - len(v)
            for j, c in enumerate(v):
                if c:
                    u[off + j] = u[off + j] - f * c
            u.pop()
            while u and not u[-1]:
                u.pop()
        return u

    u, v = dense(a), dense(b)
    while v:
        u, v = v, rem(u, v)
    if len(u) == 1:
        return {(0,): u[0] / u[0]}
    return {(j,): c for j, c in enumerate(u) if c}


def _to_uni(p):
    out = {}
    for e, c in p.items():
        out.setdefault(e[0], {})[e[1:]] = c
    return out


def _from_uni(u):
    return {(d,) + e: c for d, coeffs in u.items() for e, c in coeffs.items()}


def _content(u, k):
    return reduce(lambda g, c: gcd(g, c, k), u.values(), {})


def _prem(A, B):
    db = max(B)
    lb = B[db]
    r = dict(A)
    while r and max(r) >= db:
        dr = max(r)
        lr = r[dr]
        out = {d: mul(c, lb) for d, c in r.items()}
        for d, c in B.items():
            key = d + dr - db
            t = sub(out.get(key, {}), mul(c, lr))
            if t:
                out[key] = t
            else:
                out.pop(key, None)
        r = {d: c for d, c in out.items() if c}
    return r


def _primpart(u, k):
    c = _content(u, k)
    return {d: divexact(v, c) for d, v in u.items()}


def _gcd_recursive(a, b, k):
    A, B = _to_uni(a), _to_uni(b)
    ca, cb = _content(A, k - 1), _content(B, k - 1)
    c = gcd(ca, cb, k - 1)
    A = {d: divexact(v, ca) for d, v in A.items()}
    B = {d: divexact(v, cb) for d, v in B.items()}
    if max(A) < max(B):
        A, B = B, A
    while True:
        if max(B) == 0:
            g = {0: {(0,) * (k - 1): _one(c)}}
            break
        R = _prem(A, B)
        if not R:
            g = B
            break
        A, B = B, _primpart(R, k - 1)
    g = _primpart(g, k - 1)
    return mul(_from_uni(g), {(0,) + e: v for e, v in c.items()})


def compose(p, images, k_out, one):
    """Substitute polynomial ``images[i]`` for variable ``i`` in ``p``."""
    out = {}
    cache = {}
    for e, c in p.items():
        term = {(0,) * k_out: c}
        for i, x in enumerate(e):
            if x:
                key = (i, x)
                pw = cache.get(key)
                if pw is None:
                    pw = power(images[i], x, k_out) if images[i] else {}
                    cache[key] = pw
                term = mul(term, pw)
        out = add(out, term)
    return out
