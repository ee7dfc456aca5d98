"""Command-line interface: ``hopfoid <verb> [options]``.

Exit status: 0 on success, 1 when a requested check fails (including
``dual-eq`` on unequal classes), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .algebra.multipoly import GenTable, IllegalInversion
from .algebra.series import DEFAULT_ORDER, taylor
from .algebra.unipoly import UniPoly
from .diffmod import DiffModule, dual, poly_solutions, tensor
from .finite_dual import DualClass, compare, coproduct, mul, zeta_table
from .galois import GaloisContext, antipode_cofactor_check, laplace_check, presentation_map
from .jet import (JetAlgebra, TruncationError, axiom_suite, jet_antipode, jet_coproduct,
                  nonreduced_check, displayed_witnesses)
from .parser import ParseError, parse_expr, parse_matrix, parse_unipoly, parse_vector
from .picard_vessiot import PVRing, pv_derive, pv_fundamental, pv_isotropy_quotient_report
from .serialize import class_from_json, class_to_json, dumps, fundamental_to_json, load_file, \
    module_from_json, module_to_json
from .weyl import WeylElement, weyl_mul


class UsageError(Exception):
    pass


def default_order():
    raw = os.environ.get("HOPFOID_TRUNC")
    if raw is None:
        return DEFAULT_ORDER
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"HOPFOID_TRUNC must be an integer, got {raw!r}")
    if n < 1:
        raise UsageError("HOPFOID_TRUNC must be positive")
    return n


# -- input helpers

_WEYL_TABLE = GenTable(["Y", "x"])


def parse_weyl(src):
    """Read an element written in right normal form: sum of Y^n * a_n(x)."""
    p = parse_expr(src, _WEYL_TABLE)
    terms = {}
    for (n, k), c in p.terms.items():
        if n < 0 or k < 0:
            raise UsageError(f"negative exponent in Weyl element {src!r}")
        terms.setdefault(n, {})[k] = c
    return WeylElement({n: _poly(cs) for n, cs in terms.items()})


def _poly(cs):
    deg = max(cs)
    return UniPoly([cs.get(i, 0) for i in range(deg + 1)])


def _modules(args, need):
    mods = [DiffModule(parse_matrix(m)) for m in (args.matrix or [])]
    for path in args.file or []:
        data = load_file(path)
        if data.get("type") == "class":
            mods.append(class_from_json(data).module)
        else:
            mods.append(module_from_json(data))
    if len(mods) != need:
        raise UsageError(f"expected {need} module(s) via --matrix/--file, got {len(mods)}")
    return mods


def parse_class(src):
    """``"matrix | functional | vector"``, e.g. ``"0, x; 0, 0 | 1, 0 | 0, 1"``."""
    parts = [p.strip() for p in src.split("|")]
    if len(parts) != 3:
        raise UsageError("a class is written 'matrix | functional | vector'")
    return DualClass(DiffModule(parse_matrix(parts[0])), parse_vector(parts[1]), parse_vector(parts[2]))


def _classes(args, need):
    cls = [parse_class(c) for c in (args.cls or [])]
    cls += [class_from_json(load_file(p)) for p in (args.file or [])]
    if len(cls) != need:
        raise UsageError(f"expected {need} class(es) via --class/--file, got {len(cls)}")
    return cls


def _one_expr(args):
    if args.expr is None:
        raise UsageError("--expr is required")
    return args.expr


# -- output

def matrix_text(mat):
    return "[" + ", ".join("[" + ", ".join(str(mat[i, j]) for j in range(mat.ncols)) + "]"
                           for i in range(mat.nrows)) + "]"


class Out:
    def __init__(self, fmt):
        self.fmt = fmt

    def emit(self, text, data):
        if self.fmt == "json":
            print(dumps(data))
        else:
            print(text)


# -- verbs

def cmd_weyl_mul(args, out):
    if len(args.operands) < 2:
        raise UsageError("weyl-mul needs at least two operands")
    els = [parse_weyl(s) for s in args.operands]
    acc = els[0]
    for e in els[1:]:
        acc = weyl_mul(acc, e)
    out.emit(str(acc), {"product": str(acc), "terms": acc.to_pairs()})
    return 0


def cmd_mod_tensor(args, out):
    M, N = _modules(args, 2)
    T = tensor(M, N)
    out.emit(matrix_text(T.matrix), module_to_json(T))
    return 0


def cmd_mod_dual(args, out):
    (M,) = _modules(args, 1)
    D = dual(M)
    out.emit(matrix_text(D.matrix), module_to_json(D))
    return 0


def cmd_mod_solve(args, out):
    (M,) = _modules(args, 1)
    sp = poly_solutions(M, args.bound)
    sols = [[str(e) for e in s] for s in sp.solutions]
    lines = [f"{len(sols)} polynomial solution(s) of degree <= {sp.degree_bound}"]
    lines += ["  (" + ", ".join(s) + ")" for s in sols]
    out.emit("\n".join(lines), {"degree_bound": sp.degree_bound, "solutions": sols})
    return 0


def cmd_mod_taylor(args, out):
    a = parse_unipoly(_one_expr(args))
    delta = parse_unipoly(args.delta) if args.delta else None
    s = taylor(a, args.order, delta)
    coeffs = [str(s[n]) for n in range(args.order + 1)]
    text = "\n".join(f"Z^{n}: {c}" for n, c in enumerate(coeffs) if c != "0") or "0"
    out.emit(text, {"order": args.order, "coefficients": coeffs})
    return 0


def cmd_dual_mul(args, out):
    c, d = _classes(args, 2)
    p = mul(c, d)
    out.emit(repr(p), class_to_json(p))
    return 0


def cmd_dual_eq(args, out):
    c, d = _classes(args, 2)
    v = compare(c, d)
    out.emit(v.describe(), {"equal": v.equal, "saturation_rank": v.saturation_rank,
                            "witness": v.witness, "steps": v.steps})
    return 0 if v.equal else 1


def cmd_dual_zeta(args, out):
    (c,) = _classes(args, 1)
    vals = [str(z) for z in zeta_table(c, args.n)]
    out.emit("\n".join(f"zeta(Y^{k}) = {z}" for k, z in enumerate(vals)), {"values": vals})
    return 0


def cmd_dual_coproduct(args, out):
    (c,) = _classes(args, 1)
    pairs = coproduct(c)
    text = "\n".join(f"{l!r}\n  ⊗ {r!r}" for l, r in pairs)
    out.emit(text, {"terms": [[class_to_json(l), class_to_json(r)] for l, r in pairs]})
    return 0


def _index(s, m):
    i, j = (int(t) for t in s.split(","))
    if not (1 <= i <= m and 1 <= j <= m):
        raise UsageError(f"index ({i},{j}) out of range 1..{m}")
    return i - 1, j - 1


def cmd_galois_gen(args, out):
    (M,) = _modules(args, 1)
    ctx = GaloisContext(M)
    if args.index is None:
        raise UsageError("--index i,j is required")
    i, j = _index(args.index, ctx.m)
    g = ctx.generator(i, j)
    delta = " + ".join(f"u{k + 1}{j + 1}⊗u{i + 1}{k + 1}" for k in range(ctx.m))
    out.emit(f"u{i + 1}{j + 1} = {g!r}\nDelta(u{i + 1}{j + 1}) = {delta}",
             {"generator": class_to_json(g), "coproduct": delta})
    return 0


def cmd_galois_det(args, out):
    (M,) = _modules(args, 1)
    ctx = GaloisContext(M)
    d = ctx.det_class()
    v = compare(d, ctx.det_normal_form())
    w = compare(ctx.det_from_generators(), d)
    text = (f"det = {ctx.det_normal_form()!r}\n"
            f"alternating class == [1⊗1] over [tr M]: {v.describe()}\n"
            f"det(u_ij) == det: {w.describe()}\n"
            f"det^-1 = {ctx.det_inverse()!r}")
    out.emit(text, {"det": class_to_json(ctx.det_normal_form()), "det_inverse": class_to_json(ctx.det_inverse()),
                    "alternating_equals_normal_form": v.equal, "generator_det_equals": w.equal})
    return 0 if v.equal and w.equal else 1


def cmd_galois_antipode_check(args, out):
    (M,) = _modules(args, 1)
    ctx = GaloisContext(M)
    a, b = antipode_cofactor_check(ctx), laplace_check(ctx)
    out.emit(f"S(u_ij) = v_ji det^-1: {a}\nLaplace sum_k u_ik v_kj = delta_ij det: {b}",
             {"antipode_cofactor": a, "laplace": b})
    return 0 if a and b else 1


def cmd_galois_present(args, out):
    (M,) = _modules(args, 1)
    ctx = GaloisContext(M)
    q = parse_expr(_one_expr(args), ctx.ring.table)
    c = presentation_map(ctx, q)
    out.emit(repr(c), class_to_json(c))
    return 0


def cmd_pv_derive(args, out):
    (M,) = _modules(args, 1)
    R = PVRing(M)
    q = parse_expr(_one_expr(args), R.table)
    for _ in range(args.n):
        q = pv_derive(R, q)
    out.emit(str(q), {"result": str(q)})
    return 0


def cmd_pv_fundamental(args, out):
    (M,) = _modules(args, 1)
    F = pv_fundamental(PVRing(M), args.order)
    ok = F.at_zero_is_identity() and F.satisfies_system() and F.abel()
    out.emit(F.table() + f"\nchecks (F(0) = I, d_Z F = iota(M) F, Abel): {ok}",
             dict(fundamental_to_json(F), checks=ok))
    return 0 if ok else 1


def cmd_pv_report(args, out):
    (M,) = _modules(args, 1)
    rep = pv_isotropy_quotient_report(GaloisContext(M), args.order)
    out.emit(rep.text(), rep.to_json())
    return 0 if rep.all_certified else 1


def _jet_element(args, alg):
    if args.expr is not None:
        return parse_expr(args.expr, alg.table)
    if args.n is None:
        raise UsageError("give --n or --expr")
    if not 1 <= args.n <= alg.r:
        raise UsageError(f"--n must lie in 1..{alg.r} (raise --r)")
    return alg.y(args.n)


def _jet_alg(args):
    r = args.r or max(args.n or 1, 6)
    return JetAlgebra(r)


def cmd_jet_coproduct(args, out):
    alg = _jet_alg(args)
    p = _jet_element(args, alg)
    s = alg.tensor(2).format(jet_coproduct(alg, p))
    out.emit(s, {"element": str(p), "coproduct": s})
    return 0


def cmd_jet_antipode(args, out):
    alg = _jet_alg(args)
    p = _jet_element(args, alg)
    s = str(jet_antipode(alg, p))
    out.emit(s, {"element": str(p), "antipode": s})
    return 0


def cmd_jet_axioms(args, out):
    r = args.r or 8
    n = args.n or min(6, r)
    rep = axiom_suite(JetAlgebra(r), n)
    out.emit(rep.text(), {"r": r, "n": n, "checks": [list(c) for c in rep.checks], "ok": rep.ok})
    return 0 if rep.ok else 1


def cmd_jet_ideal_check(args, out):
    alg = JetAlgebra(args.r or 6)
    rows = [(c, disp, c.lhs == c.rhs) for c, disp in displayed_witnesses(alg)]
    nr = nonreduced_check(alg, degree=args.bound or 3)
    lines = [f"{'ok  ' if ok else 'FAIL'} {c.name}" for c, _, ok in rows]
    lines.append(f"x*y2 = delta(x*y1 - y): {nr['x*y2 = delta(x*y1 - y)']}; "
                 f"no certificate of degree <= {nr['degree']} for x or y2: {nr['consistent_with_nonreduced']}")
    ok = all(ok for _, disp, ok in rows if disp) and nr["consistent_with_nonreduced"]
    out.emit("\n".join(lines), {"claims": [{"name": c.name, "displayed": d, "holds": ok_}
                                           for c, d, ok_ in rows],
                                "nonreduced": {k: _jsonable(v) for k, v in nr.items()},
                                "ok": ok})
    return 0 if ok else 1


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(e) for e in v]
    return v if v is None or isinstance(v, (bool, int, str)) else str(v)


def cmd_suite(args, out):
    from .suite import run_all
    nums = [int(t) for t in args.only.split(",")] if args.only else None
    results = run_all(nums)
    if out.fmt == "json":
        print(dumps([{"criterion": r.number, "title": r.title, "passed": r.passed, "seconds": round(r.seconds, 3),
                      "budget": r.budget, "detail": r.detail} for r in results]))
    else:
        for r in results:
            print(r.line())
            if args.verbose:
                for d in r.detail:
                    print("      " + d)
        n = sum(r.passed for r in results)
        print(f"{n}/{len(results)} criteria passed")
    return 0 if all(r.passed for r in results) else 1


VERBS = {
    "weyl-mul": (cmd_weyl_mul, "multiply Weyl elements given in right normal form sum Y^n*a_n"),
    "mod-tensor": (cmd_mod_tensor, "tensor product of two modules"),
    "mod-dual": (cmd_mod_dual, "dual module"),
    "mod-solve": (cmd_mod_solve, "polynomial horizontal sections D(v) = 0"),
    "mod-taylor": (cmd_mod_taylor, "universal Taylor series of a polynomial"),
    "dual-mul": (cmd_dual_mul, "product of two classes"),
    "dual-eq": (cmd_dual_eq, "decide equality of two classes"),
    "dual-zeta": (cmd_dual_zeta, "zeta(c)(Y^k) for k <= n"),
    "dual-coproduct": (cmd_dual_coproduct, "coproduct of a class"),
    "galois-gen": (cmd_galois_gen, "generator u_ij and its coproduct"),
    "galois-det": (cmd_galois_det, "determinant class and its normal form"),
    "galois-antipode-check": (cmd_galois_antipode_check, "cofactor antipode and Laplace identities"),
    "galois-present": (cmd_galois_present, "image of a presentation polynomial"),
    "pv-derive": (cmd_pv_derive, "derivation on the Picard-Vessiot ring"),
    "pv-fundamental": (cmd_pv_fundamental, "truncated fundamental matrix"),
    "pv-report": (cmd_pv_report, "certified isotropy quotient relations"),
    "jet-coproduct": (cmd_jet_coproduct, "coproduct in the jet Hopf algebroid"),
    "jet-antipode": (cmd_jet_antipode, "antipode in the jet Hopf algebroid"),
    "jet-axioms": (cmd_jet_axioms, "check Hopf algebroid axioms in H_r"),
    "jet-ideal-check": (cmd_jet_ideal_check, "ideal witnesses and the non-reducedness check"),
    "suite": (cmd_suite, "run the acceptance battery"),
}


def build_parser():
    p = argparse.ArgumentParser(prog="hopfoid", description="Exact differential modules and Hopf algebroids.")
    p.add_argument("--version", action="version", version=f"hopfoid {__version__}")
    sub = p.add_subparsers(dest="verb", required=True, metavar="verb")
    for name, (fn, helptext) in VERBS.items():
        s = sub.add_parser(name, help=helptext, description=helptext)
        s.set_defaults(func=fn)
        s.add_argument("--format", choices=["text", "json"], default="text")
        if name == "weyl-mul":
            s.add_argument("operands", nargs="+", help="e.g. 'Y^2*x + Y' (powers of Y on the left)")
            continue
        if name == "suite":
            s.add_argument("--only", help="comma-separated criterion numbers")
            s.add_argument("-v", "--verbose", action="store_true")
            continue
        s.add_argument("--file", action="append", help="JSON module or class file (repeatable)")
        if name.startswith("dual-"):
            s.add_argument("--class", dest="cls", action="append",
                           help="'matrix | functional | vector', e.g. '0, x; 0, 0 | 1, 0 | 0, 1'")
            s.add_argument("--n", type=int, default=10)
        elif not name.startswith("jet-"):
            s.add_argument("--matrix", "-m", action="append", help="rows ';', entries ',': '0, x; 0, 0'")
        s.add_argument("--expr")
        s.add_argument("--order", type=int, default=None)
        if name.startswith("jet-"):
            s.add_argument("--n", type=int)
            s.add_argument("--r", type=int)
        if name == "pv-derive":
            s.add_argument("--n", type=int, default=1, help="number of times to apply the derivation")
        if name == "galois-gen":
            s.add_argument("--index", help="'i,j' (1-based)")
        if name == "mod-taylor":
            s.add_argument("--delta", help="value of the derivation on x (default 1)")
        s.add_argument("--bound", type=int, default=None)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if hasattr(args, "order"):
            if args.order is None:
                args.order = default_order()
            if args.order < 1:
                raise UsageError("--order must be positive")
        return args.func(args, Out(args.format))
    except (UsageError, ParseError, IllegalInversion, TruncationError, ValueError, KeyError,
            IndexError, OSError, json.JSONDecodeError) as e:
        print(f"hopfoid {args.verb}: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
