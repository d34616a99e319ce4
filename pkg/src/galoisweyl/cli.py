"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a check fails (or a verdict
is negative), 2 for usage, parse and evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import groups as G
from .gwa import CATALOG, gwa_check_axioms, gwa_embed, gwa_instance
from .invariants import (
    SupportSet, eigen_decompose, gamma_generators, invariant_generator_supports,
    is_invariant, monoid_generates, reynolds, weyl_generator_supports,
)
from .parser import ExprError, evaluate
from .ratfunc import VariableContext
from .scalars import ScalarField
from .skewring import SkewElement, weyl_skew_context
from .suites import DeskScaleError, UnknownSuiteError, list_suites, run_suite
from .weyl import WeylAlgebra, WeylElement, weyl_embed

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(text)


# ---------------------------------------------------------------------------
# argument helpers


def _kv(text):
    """``n=2`` style option values (also accepts a bare integer)."""
    out = {}
    for part in filter(None, (p.strip() for p in text.split(","))):
        if "=" in part:
            k, v = part.split("=", 1)
            out[k.strip()] = v.strip()
        else:
            out["n"] = part
    return out


def _field(args):
    params = tuple(p for p in (args.params or "").split(",") if p)
    return ScalarField(args.zeta or 1, params)


def parse_group(text):
    """``G(4,2,2)``, ``S3``, ``A3``, ``cyclic(3,2)`` (G_m^n as (m, n)), ``B3``, ``D3``."""
    t = text.replace(" ", "")
    m = re.fullmatch(r"G\((\d+),(\d+),(\d+)\)", t)
    if m:
        return G.GroupDescriptor.G(int(m.group(1)), int(m.group(2)), int(m.group(3)))
    m = re.fullmatch(r"cyclic\((\d+),(\d+)\)", t)
    if m:
        return G.GroupDescriptor("cyclic", int(m.group(2)), int(m.group(1)))
    m = re.fullmatch(r"([SABD])_?(\d+)(-torus)?", t)
    if m:
        kind = {"S": "S", "A": "A", "B": "B-torus", "D": "D-torus"}[m.group(1)]
        return G.GroupDescriptor(kind, int(m.group(2)))
    raise UsageError(f"cannot parse group {text!r}; try G(4,2,2), S3, A3, cyclic(3,2), B2, D2")


def _group_from_args(args):
    if getattr(args, "group", None):
        return parse_group(args.group)
    if args.m is None or args.n is None:
        raise UsageError("give --group or both --m and --n (and optionally --p)")
    return G.GroupDescriptor.G(args.m, args.p or 1, args.n)


def _gwa_params(key, args):
    if key == "cyclic_invariant":
        return {"m": args.m or 2, "n": args.n or 1}
    if key == "woronowicz" and args.variant:
        return {"variant": args.variant}
    return {}


def _context(args):
    """Evaluation context from ``eval``-style flags."""
    F = _field(args)
    chosen = [x for x in (args.weyl, args.gwa, args.skew, args.ratfunc) if x]
    if len(chosen) > 1:
        raise UsageError("choose one of --weyl, --gwa, --skew, --ratfunc")
    if args.weyl:
        n = int(_kv(args.weyl).get("n", 1))
        return WeylAlgebra(n, localized=args.localized, field=F)
    if args.gwa:
        return gwa_instance(args.gwa, **_gwa_params(args.gwa, args))
    if args.skew:
        n = int(_kv(args.skew).get("n", 1))
        return weyl_skew_context(n, F)
    if args.ratfunc:
        names = tuple(v for v in args.ratfunc.split(",") if v)
        return VariableContext(names, field=F)
    if args.localized:
        raise UsageError("--localized needs --weyl")
    return F


def _embed(e):
    if isinstance(e, WeylElement):
        return weyl_embed(e)
    if isinstance(e, SkewElement):
        return e
    if hasattr(e, "algebra") and hasattr(e.algebra, "sigma"):
        return gwa_embed(e)
    raise UsageError("--embed applies to Weyl, GWA and skew elements")


# ---------------------------------------------------------------------------
# commands


def cmd_eval(args):
    ctx = _context(args)
    e = evaluate(args.expr, ctx)
    data = {"context": str(getattr(ctx, "name", None) or ctx), "element": str(e)}
    lines = [str(e)]
    if args.embed:
        img = _embed(e)
        supp = sorted(img.support())
        data["embedding"] = str(img)
        data["support"] = [list(v) for v in supp]
        lines.append(f"embedding: {img}")
        lines.append("support: {" + ", ".join(
            ",".join(map(str, v)) if len(v) > 1 else str(v[0]) for v in supp) + "}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_gwa_instance(args):
    A = gwa_instance(args.key, **_gwa_params(args.key, args))
    rep = gwa_check_axioms(A, bound=args.bound or 3)
    data = {"name": A.name, "base": str(A.base), "a": [str(x) for x in A.a],
            "sigma": [[str(img) for img in s.images] for s in A.sigma],
            "notes": list(A.notes), "axioms": rep.to_json()}
    lines = [A.name, f"base: {A.base}"]
    for i, (a, s) in enumerate(zip(A.a, A.sigma), 1):
        lines.append(f"a{i} = {a}")
        imgs = ", ".join(f"{name} -> {img}" for name, img in zip(A.base.names, s.images))
        lines.append(f"sigma{i}: {imgs}")
    for c in rep.checks:
        w = ""
        if not c.passed:
            w = f"  witness: {c.witness}" if c.witness is not None else f"  ({c.detail})"
        lines.append(f"  {'pass' if c.passed else 'fail':5s} {c.name}{w}")
    lines.extend(f"note: {n}" for n in A.notes)
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_group_enumerate(args):
    desc = _group_from_args(args)
    elems = G.group_enumerate(desc)
    shown = elems if args.limit is None else elems[:args.limit]
    data = {"group": str(desc), "order": len(elems), "expected_order": desc.order(),
            "elements": [str(g) for g in shown]}
    text = "\n".join([f"{desc}: order {len(elems)}"] + [str(g) for g in shown])
    _emit(args, data, text)
    return EXIT_OK if len(elems) == desc.order() else EXIT_FAIL


def cmd_group_quotient(args):
    m, p, n = args.m, args.p, args.n
    if m is None or p is None or n is None:
        raise UsageError("group quotient needs --m, --p and --n")
    H = G.GroupDescriptor.G(m, 1, n)
    g = G.parse_element(args.element, n)
    H.check(g)
    q = G.quotient_image(g, m, p)
    member = G.GroupDescriptor.G(m, p, n).contains(g)
    data = {"element": str(g), "image": q, "modulus": p, f"in_G({m},{p},{n})": member}
    _emit(args, data, f"{g} -> {q} mod {p}" + ("  (in the kernel)" if q == 0 else ""))
    return EXIT_OK


def _weyl_for(desc, args):
    F = _field(args)
    if F.cyclotomic_order == 1 and desc.m > 2:
        F = ScalarField(desc.m, F.parameters)
    return WeylAlgebra(desc.n, localized=args.localized or desc.is_torus, field=F)


def cmd_reynolds(args):
    desc = parse_group(args.group)
    A = _weyl_for(desc, args)
    a = evaluate(args.expr, A)
    r = reynolds(desc, a)
    _emit(args, {"group": str(desc), "input": str(a), "reynolds": str(r)}, str(r))
    return EXIT_OK


def cmd_check(args):
    desc = parse_group(args.group)
    A = _weyl_for(desc, args)
    a = evaluate(args.expr, A)
    res = is_invariant(desc, a)
    data = {"group": str(desc), "input": str(a), "invariant": bool(res),
            "witness": None if res else str(res.witness)}
    text = "invariant" if res else f"not invariant (moved by {res.witness})"
    _emit(args, data, text)
    return EXIT_OK if res else EXIT_FAIL


def cmd_gamma(args):
    desc = parse_group(args.group)
    gens = gamma_generators(desc)
    _emit(args, {"group": str(desc), "generators": [str(g) for g in gens]},
          "\n".join(str(g) for g in gens))
    return EXIT_OK


def cmd_decompose(args):
    m, p, n = args.m, args.p, args.n
    if m is None or p is None or n is None:
        raise UsageError("decompose needs --m, --p and --n")
    F = ScalarField(m if m > 2 else 1)
    A = WeylAlgebra(n, field=F)
    a = evaluate(args.expr, A)
    h = G.parse_element(args.h, n) if args.h else G.GroupElement((1,) + (0,) * (n - 1),
                                                                 tuple(range(n)))
    res = eigen_decompose(m, p, n, h, a)
    data = res.to_json()
    lines = [f"h = {h}, eps = {res.epsilon}"]
    for k, (P, Q) in enumerate(zip(res.components, res.quotients)):
        lines.append(f"P{k} = {P}")
        lines.append(f"  quotient = {Q}  polynomial: {res.polynomial[k]}  "
                     f"H-invariant: {res.localized_invariance[k]}")
    lines.append(f"sum: {res.sums_to_input}  eigen: {all(res.eigen_identities)}  "
                 f"verdict: {'pass' if res.passed else 'fail'}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK if res.passed else EXIT_FAIL


def _vectors(text):
    rows = [r for r in (x.strip() for x in text.split(";")) if r]
    vecs = [tuple(int(c) for c in r.split(",")) for r in rows]
    if not vecs or len({len(v) for v in vecs}) != 1:
        raise UsageError("--vectors wants rows of equal length, e.g. '1,0;0,1'")
    return SupportSet(len(vecs[0]), frozenset(vecs))


def cmd_support(args):
    if args.vectors:
        supp = _vectors(args.vectors)
    elif args.weyl:
        supp = weyl_generator_supports(args.weyl)
    elif args.invariant:
        m, n = (int(x) for x in args.invariant.split(","))
        supp = invariant_generator_supports(m, n)
    else:
        raise UsageError("give --vectors, --weyl N or --invariant M,N")
    v = monoid_generates(supp, args.bound)
    data = dict(v.to_json(), support=[list(x) for x in supp.sorted()])
    _emit(args, data, f"{v.verdict}: {v.reason}")
    return EXIT_OK if v.verdict == "yes" else EXIT_FAIL


def _suite_params(items):
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"--param wants key=value, got {item!r}")
        k, v = item.split("=", 1)
        try:
            out[k] = json.loads(v)
        except json.JSONDecodeError:
            out[k] = v
    return out


def cmd_suite_run(args):
    report = run_suite(args.id, _suite_params(args.param), seed=args.seed, bound=args.bound)
    if args.json:
        print(report.dumps())
    else:
        print(report.to_text(verbose=args.verbose))
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_suite_list(args):
    suites = list_suites()
    data = [{"id": s.id, "tag": s.tag, "description": s.description} for s in suites]
    _emit(args, data, "\n".join(f"{s.id:20s} [{s.tag}] {s.description}" for s in suites))
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")

    field_opts = argparse.ArgumentParser(add_help=False)
    field_opts.add_argument("--zeta", type=int, help="adjoin a primitive root of unity of this order")
    field_opts.add_argument("--params", help="comma-separated transcendental parameters, e.g. q")
    field_opts.add_argument("--localized", action="store_true", help="invert the x_i")

    mpn = argparse.ArgumentParser(add_help=False)
    mpn.add_argument("--m", type=int)
    mpn.add_argument("--p", type=int)
    mpn.add_argument("--n", type=int)

    ap = argparse.ArgumentParser(prog="galoisweyl", parents=[common],
                                 description="Weyl algebras, GWAs, skew rings and invariants")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common, field_opts], help="evaluate an expression")
    p.add_argument("--weyl", help="Weyl algebra, e.g. n=2")
    p.add_argument("--gwa", choices=sorted(CATALOG), help="catalog GWA")
    p.add_argument("--skew", help="skew ring k(t) * Z^n, e.g. n=2")
    p.add_argument("--ratfunc", help="rational functions in these variables, e.g. u,v")
    p.add_argument("--m", type=int, help="m for cyclic_invariant")
    p.add_argument("--n", type=int, help="n for cyclic_invariant")
    p.add_argument("--variant", choices=["corrected", "printed"])
    p.add_argument("--embed", action="store_true", help="also print the skew image and support")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_eval)

    gp = sub.add_parser("gwa", parents=[common], help="generalized Weyl algebra catalog")
    gsub = gp.add_subparsers(dest="gwa_command", required=True)
    p = gsub.add_parser("instance", parents=[common], help="show a catalog algebra and its axioms")
    p.add_argument("key", choices=sorted(CATALOG))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--variant", choices=["corrected", "printed"])
    p.add_argument("--bound", type=int, help="search bound for the independence check")
    p.set_defaults(func=cmd_gwa_instance)

    gp = sub.add_parser("group", parents=[common], help="G(m,p,n) and relatives")
    gsub = gp.add_subparsers(dest="group_command", required=True)
    p = gsub.add_parser("enumerate", parents=[common, mpn], help="list group elements")
    p.add_argument("--group", help="G(m,p,n), S3, A3, cyclic(m,n), B3, D3")
    p.add_argument("--limit", type=int, help="print at most this many elements")
    p.set_defaults(func=cmd_group_enumerate)
    p = gsub.add_parser("quotient", parents=[common, mpn], help="image in Z/p of a G(m,1,n) element")
    p.add_argument("--element", required=True, help="e.g. '[1,0; (1 2)]'")
    p.set_defaults(func=cmd_group_quotient)

    ip = sub.add_parser("invariants", parents=[common], help="invariant theory tools")
    isub = ip.add_subparsers(dest="inv_command", required=True)
    for name, func, helptext in (("reynolds", cmd_reynolds, "average over the group"),
                                 ("check", cmd_check, "test invariance")):
        p = isub.add_parser(name, parents=[common, field_opts], help=helptext)
        p.add_argument("--group", required=True)
        p.add_argument("--expr", required=True)
        p.set_defaults(func=func)
    p = isub.add_parser("gamma", parents=[common], help="generators of the invariant t-polynomials")
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_gamma)
    p = isub.add_parser("decompose", parents=[common, mpn],
                        help="h-eigenspace decomposition of a G(m,p,n)-invariant")
    p.add_argument("--h", help="element of G(m,1,n); default [1,0,...; ()]")
    p.add_argument("--expr", required=True)
    p.set_defaults(func=cmd_decompose)
    p = isub.add_parser("galois-support", parents=[common],
                        help="does a support set generate Z^n as a monoid")
    p.add_argument("--vectors", help="rows separated by ';', e.g. '1,0;0,1'")
    p.add_argument("--weyl", type=int, metavar="N", help="supports of x_i, d_i in rank N")
    p.add_argument("--invariant", metavar="M,N", help="supports of Delta_m and X_m")
    p.add_argument("--bound", type=int, help="coefficient-sum bound for the search")
    p.set_defaults(func=cmd_support)

    sp = sub.add_parser("suite", parents=[common], help="verification suites")
    ssub = sp.add_subparsers(dest="suite_command", required=True)
    p = ssub.add_parser("run", parents=[common], help="run one suite")
    p.add_argument("id")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--bound", type=int)
    p.add_argument("--param", action="append", metavar="KEY=VALUE",
                   help="suite parameter (repeatable), e.g. n=3")
    p.add_argument("--verbose", action="store_true", help="list passing cases too")
    p.set_defaults(func=cmd_suite_run)
    p = ssub.add_parser("list", parents=[common], help="list suites")
    p.set_defaults(func=cmd_suite_list)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if not hasattr(args, "json"):
        args.json = False
    try:
        return args.func(args)
    except (UsageError, ExprError, UnknownSuiteError, DeskScaleError, G.MembershipError,
            G.CapExceededError, KeyError, ValueError, ZeroDivisionError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
