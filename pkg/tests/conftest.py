import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.register_profile("thorough", deadline=None, max_examples=300)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


coeffs = st.integers(-9, 9).filter(bool)


def weyl_elements(alg, max_terms=4, max_deg=2):
    """Small Weyl elements built straight from exponent vectors."""
    n = alg.n
    lo = -max_deg if alg.localized else 0
    alpha = st.tuples(*[st.integers(lo, max_deg)] * n)
    beta = st.tuples(*[st.integers(0, max_deg)] * n)
    mono = st.tuples(alpha, beta, coeffs)

    def build(items):
        out = alg.zero
        for a, b, c in items:
            out = out + alg.monomial(a, b, c)
        return out

    return st.lists(mono, min_size=0, max_size=max_terms).map(build)


def base_polys(ctx, max_terms=3, max_deg=2):
    """Polynomials (Laurent where allowed) in a variable context, integer coefficients."""
    exps = st.tuples(*[st.integers(-max_deg if l else 0, max_deg) for l in ctx.laurent])

    def build(items):
        out = ctx.zero
        for e, c in items:
            term = ctx(c)
            for name, k in zip(ctx.names, e):
                if k:
                    term = term * ctx.var(name) ** k
            out = out + term
        return out

    return st.lists(st.tuples(exps, coeffs), max_size=max_terms).map(build)


def skew_elements(skew, max_terms=3, norm=2):
    vec = st.tuples(*[st.integers(-norm, norm)] * skew.rank)

    def build(items):
        out = skew.zero
        for v, f in items:
            out = out + skew.coeff(f) * skew.e(v)
        return out

    return st.lists(st.tuples(vec, base_polys(skew.base)), max_size=max_terms).map(build)


def gwa_elements(alg, max_terms=3, norm=2):
    vec = st.tuples(*[st.integers(-norm, norm)] * alg.n)

    def build(items):
        out = alg.zero
        for v, d in items:
            out = out + alg.monomial(v, d)
        return out

    return st.lists(st.tuples(vec, base_polys(alg.base)), max_size=max_terms).map(build)
