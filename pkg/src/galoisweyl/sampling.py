"""Seeded random elements for suites and tests.

Defaults follow the report conventions: coefficient height at most 9, at
most 5 terms, lattice (or exponent) norm at most 3.
"""

from __future__ import annotations

import random

from .ratfunc import RationalFunction

__all__ = [
    "HEIGHT", "TERMS", "NORM", "rng_for", "random_scalar", "random_poly", "random_ratfunc",
    "random_weyl", "random_skew", "random_gwa",
]

HEIGHT = 9
TERMS = 5
NORM = 3


def rng_for(seed, *labels):
    """Independent stream per (seed, label) so suites don't perturb each other."""
    return random.Random(f"{seed}:" + ":".join(map(str, labels)))


def _int(rng, height=HEIGHT, nonzero=True):
    while True:
        c = rng.randint(-height, height)
        if c or not nonzero:
            return c


def random_scalar(field, rng, height=HEIGHT):
    """Small combination of roots of unity and parameter monomials."""
    out = field(_int(rng, height))
    if field.cyclotomic_order > 2 and rng.random() < 0.5:
        out = out + field.zeta(rng.randrange(1, field.cyclotomic_order)) * _int(rng, height)
    for name in field.parameters:
        if rng.random() < 0.4:
            out = out + field.param(name) ** rng.randint(1, 2) * _int(rng, height)
    return out


def random_poly(ctx, rng, terms=3, degree=2, scalars=False):
    """Random element of the base ring (Laurent variables may get negative powers)."""
    out = ctx.zero
    for _ in range(rng.randint(1, terms)):
        c = random_scalar(ctx.field, rng) if scalars else ctx.field(_int(rng))
        term = ctx(c)
        for name, laurent in zip(ctx.names, ctx.laurent):
            lo = -degree if laurent else 0
            k = rng.randint(lo, degree)
            if k:
                term = term * ctx.var(name) ** k
        out = out + term
    return out


def random_ratfunc(ctx, rng, degree=2):
    num = random_poly(ctx, rng, 3, degree, scalars=True)
    while True:
        den = random_poly(ctx, rng, 2, degree - 1 if degree > 1 else 1)
        if den:
            return num / den


def random_weyl(alg, rng, terms=TERMS, degree=NORM, scalars=False):
    out = alg.zero
    n = alg.n
    for _ in range(rng.randint(1, terms)):
        lo = -degree if alg.localized else 0
        alpha = [rng.randint(lo, degree) for _ in range(n)]
        beta = [rng.randint(0, degree) for _ in range(n)]
        c = random_scalar(alg.field, rng) if scalars else _int(rng)
        out = out + alg.monomial(alpha, beta, c)
    return out


def random_skew(ctx, rng, terms=TERMS, norm=NORM, degree=2):
    out = ctx.zero
    for _ in range(rng.randint(1, terms)):
        v = tuple(rng.randint(-norm, norm) for _ in range(ctx.rank))
        f = random_poly(ctx.base, rng, 3, degree, scalars=True)
        out = out + f * ctx.e(v)
    return out


def random_gwa(alg, rng, terms=TERMS, norm=NORM, degree=2):
    out = alg.zero
    for _ in range(rng.randint(1, terms)):
        v = tuple(rng.randint(-norm, norm) for _ in range(alg.n))
        d = random_poly(alg.base, rng, 2, degree, scalars=True)
        out = out + alg.monomial(v, d)
    return out


def is_rational_function(x):
    return isinstance(x, RationalFunction)
