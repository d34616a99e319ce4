"""Canonical text output for every element type.

All printers emit strings the expression parser reads back to an equal
element.  Terms are ordered deterministically (graded-lex descending for
polynomials, lexicographic for lattice supports).
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import polys

_ATOM = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*(\^-?\d+)?$")


def monomial(e, names):
    parts = []
    for x, name in zip(e, names):
        if x == 1:
            parts.append(name)
        elif x:
            parts.append(f"{name}^{x}")
    return "*".join(parts)


def _term(neg, body, compound, mono):
    if compound:
        body = f"({body})"
    if mono:
        text = mono if body == "1" else f"{body}*{mono}"
    else:
        text = body
    return neg, text


def join_terms(terms):
    """``terms`` is a list of (negative, text); returns the signed sum."""
    if not terms:
        return "0"
    out = []
    for i, (neg, text) in enumerate(terms):
        if i == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f" - {text}" if neg else f" + {text}")
    return "".join(out)


def signed(pieces):
    """Turn a list of (neg, text) into (neg, body, compound) for use as a coefficient."""
    if not pieces:
        return False, "0", False
    if len(pieces) == 1:
        neg, text = pieces[0]
        return neg, text, _toplevel_sum(text)
    return False, join_terms(pieces), True


def _toplevel_sum(text):
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and ch in "+-" and i > 0 and text[i - 1] == " ":
            return True
    return False


# -- coefficient formatters ---------------------------------------------------

def fmt_rational(c):
    c = Fraction(c)
    return c < 0, str(abs(c)), False


def fmt_cyc(c):
    from .scalars import CycNumber
    if not isinstance(c, CycNumber):
        return fmt_rational(c)
    pieces = []
    for j in range(len(c.coords) - 1, -1, -1):
        a = c.coords[j]
        if not a:
            continue
        neg, body, _ = fmt_rational(a)
        mono = "zeta" if j == 1 else (f"zeta^{j}" if j else "")
        pieces.append(_term(neg, body, False, mono))
    return signed(pieces)


def poly_pieces(p, names, cfmt):
    pieces = []
    for e in sorted(p, key=polys.grlex_key, reverse=True):
        neg, body, compound = cfmt(p[e])
        mono = monomial(e, names)
        if not mono:
            compound = compound and len(p) > 1
        pieces.append(_term(neg, body, compound, mono))
    return pieces


def _wrap_den(text):
    return text if _ATOM.match(text) else f"({text})"


def fraction_signed(num, den, names, cfmt):
    npieces = poly_pieces(num, names, cfmt)
    if len(den) == 1 and not any(next(iter(den))):
        return signed(npieces)
    dtext = join_terms(poly_pieces(den, names, cfmt))
    if len(npieces) == 1:
        neg, ntext = npieces[0]
        if _toplevel_sum(ntext):
            ntext = f"({ntext})"
        return neg, f"{ntext}/{_wrap_den(dtext)}", True
    return False, f"({join_terms(npieces)})/{_wrap_den(dtext)}", True


def fmt_scalar(s):
    if not s.num:
        return False, "0", False
    return fraction_signed(s.num, s.den, s.field.parameters, fmt_cyc)


def format_scalar(s):
    neg, body, _ = fmt_scalar(s)
    return f"-{body}" if neg else body


def fmt_ratfunc(f):
    if not f.num:
        return False, "0", False
    return fraction_signed(f.num, f.den, f.context.names, fmt_scalar)


def format_ratfunc(f):
    neg, body, _ = fmt_ratfunc(f)
    return f"-{body}" if neg else body


def lattice_atom(v):
    return "E(" + ",".join(str(x) for x in v) + ")"


def format_terms(items, cfmt, mono_fmt):
    """Generic ``sum c * mono`` printer; ``items`` already in output order."""
    pieces = []
    for key, c in items:
        neg, body, compound = cfmt(c)
        mono = mono_fmt(key)
        if not mono:
            compound = compound and len(items) > 1
        pieces.append(_term(neg, body, compound, mono))
    return join_terms(pieces)
