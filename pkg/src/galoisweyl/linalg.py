"""Small exact linear algebra: determinants over a field, integer lattices."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def determinant(rows, zero):
    """Determinant by Laplace expansion along the first row (fine for n <= 5)."""
    n = len(rows)
    if n == 0:
        return zero + 1
    if n == 1:
        return rows[0][0]
    total = zero
    for j, a in enumerate(rows[0]):
        if not a:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * determinant(minor, zero)
        total = total + term if j % 2 == 0 else total - term
    return total


def hermite_rows(vectors):
    """Row-style Hermite normal form of the integer span of ``vectors``.

    Returns the nonzero rows (upper triangular with positive pivots).
    """
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    ncols = len(rows[0])
    out = []
    col = 0
    while rows and col < ncols:
        nz = [r for r in rows if r[col]]
        if not nz:
            col += 1
            continue
        # gcd-reduce the column by repeated Euclid on rows
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            pivot = nz[0]
            for r in nz[1:]:
                q = r[col] // pivot[col]
                for k in range(ncols):
                    r[k] -= q * pivot[k]
            nz = [r for r in nz if r[col]]
        pivot = nz[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        out.append(pivot)
        rows = [r for r in rows if not r[col] and any(r)]
        col += 1
    # reduce entries above pivots
    for i, r in enumerate(out):
        c = next(k for k, x in enumerate(r) if x)
        for prev in out[:i]:
            q = prev[c] // r[c]
            if q:
                for k in range(ncols):
                    prev[k] -= q * r[k]
    return out


def lattice_index(vectors, n):
    """Index of the subgroup generated by ``vectors`` in ``Z^n`` (``0`` if rank < n)."""
    h = hermite_rows(vectors)
    if len(h) < n:
        return 0
    idx = 1
    for r in h:
        idx *= next(x for x in r if x)
    return abs(idx)


def rational_rank(vectors):
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    if not rows:
        return 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def int_gcd_list(xs):
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
