"""Independent reference computations used by the tests.

Nothing here calls the normal-ordering code under test: Weyl products are
recomputed by naive word rewriting, differential operators are applied to
sympy polynomials, and rational functions are compared through sympy.
"""

from __future__ import annotations

import cmath
from collections import defaultdict
from fractions import Fraction

import sympy


# -- Weyl algebra by word rewriting ---------------------------------------------


def word_of(alg, key):
    """Monomial key -> word of generators ``('x', i)`` / ``('d', i)`` (x's first)."""
    n = alg.n
    word = []
    for i in range(n):
        word += [("x", i)] * key[i]
    for i in range(n):
        word += [("d", i)] * key[n + i]
    return tuple(word)


def rewrite_normal_form(words):
    """``{word: coeff}`` -> ``{(alpha, beta): coeff}`` using only ``d_i x_j = x_j d_i + delta_ij``
    and commuting generators of the same kind; one rewrite at a time."""
    todo = defaultdict(Fraction)
    for w, c in words.items():
        todo[w] += c
    done = defaultdict(Fraction)
    while todo:
        w, c = todo.popitem()
        if not c:
            continue
        for pos in range(len(w) - 1):
            a, b = w[pos], w[pos + 1]
            if a[0] == "d" and b[0] == "x":
                swapped = w[:pos] + (b, a) + w[pos + 2:]
                todo[swapped] += c
                if a[1] == b[1]:
                    todo[w[:pos] + w[pos + 2:]] += c
                break
        else:
            xs = sorted(i for k, i in w if k == "x")
            ds = sorted(i for k, i in w if k == "d")
            done[(tuple(xs), tuple(ds))] += c
    return {k: v for k, v in done.items() if v}


def naive_product(alg, a, b):
    """``a * b`` in ``A_n`` recomputed by rewriting (integer/rational coefficients only)."""
    words = defaultdict(Fraction)
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            words[word_of(alg, ka) + word_of(alg, kb)] += ca.rational() * cb.rational()
    nf = rewrite_normal_form(words)
    out = alg.zero
    n = alg.n
    for (xs, ds), c in nf.items():
        alpha = [xs.count(i) for i in range(n)]
        beta = [ds.count(i) for i in range(n)]
        out = out + alg.monomial(alpha, beta, c)
    return out


# -- differential operators acting on polynomials ------------------------------


def apply_operator(alg, a, f, xs):
    """Act with ``a`` (normal ordered: x's left of d's) on the sympy expression ``f``."""
    n = alg.n
    total = 0
    for k, c in a.terms.items():
        g = f
        for i in range(n):
            if k[n + i]:
                g = sympy.diff(g, xs[i], k[n + i])
        for i in range(n):
            g = g * xs[i] ** k[i]
        total += sympy.Rational(str(c.rational())) * g
    return sympy.expand(total)


# -- rational functions through sympy -----------------------------------------------


def to_sympy(element, symbols=None):
    """Parse the canonical text of a rational function (or scalar) with sympy."""
    text = str(element).replace("^", "**")
    return sympy.sympify(text, locals=symbols or {})


def sympy_equal(a, b):
    return sympy.cancel(sympy.together(a - b)) == 0


# -- cyclotomic numbers numerically -------------------------------------------------


def cyc_complex(x, m):
    """Numerical value of a CycNumber / rational scalar in Q(zeta_m)."""
    coords = getattr(x, "coords", None)
    if coords is None:
        return complex(Fraction(x))
    z = cmath.exp(2j * cmath.pi / m)
    return sum(complex(Fraction(c)) * z ** j for j, c in enumerate(coords))
