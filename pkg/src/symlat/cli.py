"""Command-line front end: ``symlat <command> [flags] [files]``.

Every command prints one JSON document.  Exit status 0 means the question
was decided (the answer may be "no"); 2 means the input was unusable.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import linalg
from .engine import (NoIso, brute_force_short_vectors, gs_recover, iso_pair,
                     isomorphism_to_standard, verify_certificate)
from .errors import BadInput, InternalCheckFailed, NotInvertible, SymlatError
from .glattice import DEFAULT_FACTOR_BOUND, is_invertible
from .group import default_u, make_group
from .ideals import realize
from .instances import CONSTRUCTIONS, SplitMix64, dump, generate, load
from .lattice import is_lll_reduced, is_unimodular, lll_reduce
from .modring import pow_vec
from .roots import GradedOrder, mu_of_order

INPUT_ERROR = 2


def _max_n() -> int:
    return int(os.environ.get("SYMLAT_MAX_N", "32"))


def _strs(v):
    if isinstance(v, (list, tuple)):
        return [_strs(x) for x in v]
    return str(v)


def _parse_ints(text, what):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise BadInput(f"--{what} expects comma-separated integers") from None


def _group(args):
    orders = _parse_ints(args.group, "group")
    u = tuple(_parse_ints(args.u, "u")) if args.u else default_u(orders)
    ctx = make_group(orders, u)
    if ctx.n > _max_n():
        raise BadInput(f"n = {ctx.n} exceeds SYMLAT_MAX_N = {_max_n()}")
    return ctx


def _trace_json(tr):
    if tr is None:
        return None
    out = {"timings": {k: round(v, 6) for k, v in tr.timings.items()}}
    if tr.aux is not None:
        a = tr.aux
        out["aux"] = {"p": a.p, "r": a.r, "q": a.q, "s": a.s, "ell": str(a.ell), "m": str(a.m),
                      "k_ell": str(a.k_ell), "k_m": str(a.k_m)}
    for key in ("e2", "e_lm", "nu_m", "s_elem", "nu", "alpha"):
        val = getattr(tr, key)
        if val is not None:
            out[key] = _strs(val)
    for key in ("b", "q", "power_steps"):
        val = getattr(tr, key)
        if val is not None:
            out[key] = str(val)
    return out


def _iso_result(L, res, tr):
    if isinstance(res, NoIso):
        return {"answer": "no", "reason": res.reason, "detail": res.detail,
                "certificate": None, "trace": _trace_json(res.trace), "verified": True}
    verify_certificate(L, res.short_vector)
    return {"answer": "yes",
            "certificate": {"short_vector": _strs(res.short_vector), "map_matrix": _strs(res.map_matrix)},
            "trace": _trace_json(tr), "verified": True}


# --- commands -----------------------------------------------------------------------

def cmd_gen(args):
    ctx = _group(args)
    inst = generate(ctx, args.construction, args.seed)
    text = dump(inst, args.output)
    return json.loads(text)


def cmd_gs_gen(args):
    n = args.n
    if n < 1 or n % 2 == 0:
        raise BadInput("n must be odd")
    rng = SplitMix64(args.seed)

    def pmul(a, b):
        out = [0] * n
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[(i + j) % n] += x * y
        return out

    for _ in range(1000):
        v = [rng.between(-1, 1) for _ in range(n)]
        basis = [pmul([int(i == j) for j in range(n)], v) for i in range(n)]
        if linalg.det(basis):
            break
    else:
        raise BadInput("no invertible ternary v found")
    vbar = [v[(-i) % n] for i in range(n)]
    doc = {"n": n, "ideal_basis": _strs(basis), "relnorm": _strs(pmul(v, vbar)),
           "meta": {"seed": args.seed, "hidden_v": _strs(v)}}
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(doc, fh, indent=1)
    return doc


def cmd_iso(args):
    inst = load(args.file, _max_n())
    t0 = time.perf_counter()
    res = isomorphism_to_standard(inst.lattice, skip_invertibility_check=args.skip_invertibility_check,
                                  bound=args.trial_division_bound)
    tr = getattr(res, "trace", None)
    out = _iso_result(inst.lattice, res, tr)
    out["seconds"] = round(time.perf_counter() - t0, 6)
    return out


def cmd_iso_pair(args):
    a = load(args.file_a, _max_n())
    b = load(args.file_b, _max_n())
    if a.ctx != b.ctx:
        raise BadInput("instances use different groups")
    try:
        res = iso_pair(a.lattice, b.lattice, bound=args.trial_division_bound)
    except NotInvertible as exc:
        return {"answer": "no", "reason": "not-invertible", "detail": str(exc),
                "certificate": None, "verified": True}
    if isinstance(res, NoIso):
        return {"answer": "no", "reason": res.reason, "certificate": None, "verified": True}
    return {"answer": "yes", "certificate": {"map_matrix": _strs(res.map_matrix)}, "verified": True}


def cmd_invertible(args):
    inst = load(args.file, _max_n())
    inv = is_invertible(inst.lattice, args.trial_division_bound)
    out = {"answer": "yes" if inv else "no", "failed_step": inv.failed_step, "verified": True}
    if inv.e2 is not None:
        out["e2"] = _strs(inv.e2)
        out["q"] = str(inv.q)
    if inv.e_q is not None:
        out["e_q"] = _strs(inv.e_q)
    return out


def cmd_gs(args):
    try:
        with open(args.file) as fh:
            doc = json.load(fh)
        n = int(doc["n"])
        basis = [[int(x) for x in row] for row in doc["ideal_basis"]]
        rel = [int(x) for x in doc["relnorm"]]
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"malformed recovery input: {exc}") from None
    if n > _max_n():
        raise BadInput(f"n = {n} exceeds SYMLAT_MAX_N = {_max_n()}")
    v = gs_recover(n, basis, rel, bound=args.trial_division_bound)
    if v is None:
        return {"answer": "no", "v": None, "verified": True}
    return {"answer": "yes", "v": _strs(v), "verified": True}


def cmd_lll(args):
    inst = load(args.file, _max_n())
    red = lll_reduce(inst.lattice.gram)
    ok = is_lll_reduced(red.gram_reduced)
    G = inst.lattice.gram
    U = red.transform
    if linalg.matmul(linalg.matmul(U, G), linalg.transpose(U)) != red.gram_reduced or abs(linalg.det(U)) != 1:
        raise InternalCheckFailed("reduction transform does not match")
    out = {"gram_reduced": _strs(red.gram_reduced), "transform": _strs(U),
           "gso_norms": [str(b) for b in red.gso_norms], "lll_reduced": ok, "verified": ok}
    if is_unimodular(G):
        n = len(G)
        M = inst.lattice.transport(U)
        out["within_bounds"] = (
            all(red.gram_reduced[i][i] <= 2 ** (n - 1) for i in range(n))
            and all(abs(x) <= 2 ** (n - 1) for row in red.gram_reduced for x in row)
            and all(abs(x) <= 3 ** (n - 1) for m in M.action for row in m for x in row))
    return out


def cmd_mu(args):
    L = load(args.file, _max_n()).lattice
    ctx = L.ctx
    k = args.k or ctx.k
    if k % ctx.k:
        raise BadInput(f"k must be a multiple of the group exponent {ctx.k}")
    return _mu_from(L, k, args.trial_division_bound)


def _mu_from(L, k, bound):
    ctx = L.ctx
    inv = is_invertible(L, bound)
    if not inv:
        return {"answer": "no", "reason": "not-invertible", "verified": True}
    res = isomorphism_to_standard(L, bound=bound)
    if isinstance(res, NoIso):
        return {"answer": "no", "reason": res.reason, "verified": True}
    I = realize(L, inv.e2)[0]
    nu = pow_vec(ctx, I.element(res.short_vector), k)  # short in degree k
    A = GradedOrder(ctx, I, k, nu)
    mu = mu_of_order(A)
    sizes = [sum(1 for d, _ in mu if d == i) for i in range(k)]
    total = len(mu)
    return {"answer": "yes", "size": total, "per_degree": sizes,
            "divisibility": total % (2 * ctx.n) == 0 and (2 * ctx.n * k) % total == 0,
            "verified": True}


def cmd_table(args):
    from .tables import decompose_table
    try:
        with open(args.file) as fh:
            doc = json.load(fh)
        table = [[int(x) for x in row] for row in doc["table"]]
        u = int(doc["u"])
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise BadInput(f"malformed table input: {exc}") from None
    orders, ucoords = decompose_table(table, u)
    ctx = make_group(orders, tuple(ucoords))
    return {"orders": list(ctx.orders), "u": list(ctx.u), "n": ctx.n, "k": ctx.k}


def cmd_brute(args):
    inst = load(args.file, _max_n())
    found = brute_force_short_vectors(inst.lattice)
    return {"answer": "yes" if found else "no", "count": len(found), "short_vectors": _strs(found)}


# --- argument parsing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="compact single-line JSON output")
    common.add_argument("--trial-division-bound", type=int, default=DEFAULT_FACTOR_BOUND)

    p = argparse.ArgumentParser(prog="symlat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", parents=[common], help="generate an instance file")
    g.add_argument("--group", required=True, help="cyclic orders, e.g. 2,4")
    g.add_argument("--u", help="coordinates of u (default: smallest order-2 element)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--construction", choices=CONSTRUCTIONS, default="principal")
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    g = sub.add_parser("gs-gen", parents=[common], help="generate a generator-recovery input")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gs_gen)

    g = sub.add_parser("iso", parents=[common], help="decide isomorphism with the standard lattice")
    g.add_argument("file")
    g.add_argument("--skip-invertibility-check", action="store_true")
    g.set_defaults(func=cmd_iso)

    g = sub.add_parser("iso-pair", parents=[common], help="decide isomorphism of two lattices")
    g.add_argument("file_a")
    g.add_argument("file_b")
    g.set_defaults(func=cmd_iso_pair)

    g = sub.add_parser("invertible", parents=[common], help="test invertibility")
    g.add_argument("file")
    g.set_defaults(func=cmd_invertible)

    g = sub.add_parser("gs-recover", parents=[common], help="recover a principal ideal generator")
    g.add_argument("file")
    g.set_defaults(func=cmd_gs)

    g = sub.add_parser("lll", parents=[common], help="LLL-reduce the Gram matrix")
    g.add_argument("file")
    g.set_defaults(func=cmd_lll)

    g = sub.add_parser("mu", parents=[common], help="roots of unity of the graded quotient order")
    g.add_argument("file")
    g.add_argument("--k", type=int, help="grading period (a multiple of the exponent)")
    g.set_defaults(func=cmd_mu)

    g = sub.add_parser("table", parents=[common], help="cyclic decomposition of a multiplication table")
    g.add_argument("file")
    g.set_defaults(func=cmd_table)

    g = sub.add_parser("brute", parents=[common], help="exhaustive short-vector search (small n)")
    g.add_argument("file")
    g.set_defaults(func=cmd_brute)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except InternalCheckFailed as exc:
        print(f"symlat: internal check failed: {exc}", file=sys.stderr)
        return 1
    except (SymlatError, ValueError) as exc:
        print(f"symlat: {exc}", file=sys.stderr)
        return INPUT_ERROR
    print(json.dumps(out, separators=(",", ":")) if args.json else json.dumps(out, indent=1))
    return 0


if __name__ == "__main__":
    sys.exit(main())
