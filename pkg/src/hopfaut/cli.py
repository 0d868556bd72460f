"""Command-line interface: ``hopfaut <command> [options]``.

Output is JSON on stdout by default, TSV with ``--format tsv``.  Exit codes:
0 success, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import asdict

from . import __version__
from . import action as A
from . import cokertab, hopf, nilrep, pbw, symfunc, verify
from . import freegroup as fg

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# output helpers


def _tsv(rows) -> str:
    return "".join("\t".join(str(c) for c in r) + "\n" for r in rows)


def _emit(args, payload: dict, rows=None) -> None:
    if args.format == "tsv":
        sys.stdout.write(_tsv(rows if rows is not None else sorted(payload.items())))
    else:
        sys.stdout.write(json.dumps({"version": __version__, **payload}) + "\n")


def _schur_rows(p: symfunc.SchurPoly, degree=None) -> list:
    head = (["degree"] if degree is not None else []) + ["lambda", "mult"]
    rows = [head]
    for lam, c in p.items():
        rows.append(([degree] if degree is not None else []) + [",".join(map(str, lam)), c])
    return rows


def _partition(s: str | None, name: str = "--lambda") -> tuple:
    if s is None:
        raise UsageError(f"{name} is required")
    try:
        return symfunc.parse_partition(s)
    except ValueError as e:
        raise UsageError(f"bad partition {s!r}: {e}")


def _descriptor(args) -> hopf.HopfDescriptor:
    trunc = args.truncation if args.truncation is not None else 6
    if args.algebra == "tensor":
        return hopf.tensor_algebra(args.dim, trunc)
    return hopf.enveloping_nil2(args.dim, trunc)


# ---------------------------------------------------------------------------
# commands


def cmd_hopf_eval(args) -> int:
    desc = _descriptor(args)
    a = hopf.parse_element(desc, args.expr)
    if args.op == "element":
        out = hopf.element_to_json(a)
        text = hopf.format_element(a)
    elif args.op == "coproduct":
        t = hopf.coproduct(a)
        out, text = hopf.tensor_to_json(t), hopf.format_tensor(t)
    elif args.op == "antipode":
        b = hopf.antipode(a)
        out, text = hopf.element_to_json(b), hopf.format_element(b)
    else:
        c = hopf.counit(a)
        out, text = {"value": str(c)}, str(c)
    _emit(args, {"op": args.op, "descriptor": desc.to_json(), "result": out, "text": text},
          [["op", "text"], [args.op, text]])
    return EXIT_OK


def _aut(args) -> list:
    items = [s.strip() for s in args.aut.split(",")]
    try:
        return fg.parse_nielsen(items)
    except ValueError as e:
        raise UsageError(str(e))


def cmd_act(args) -> int:
    desc = _descriptor(args)
    t = hopf.parse_tensor(desc, args.tensor)
    ctx = A.ActionContext(desc, t.arity)
    seq = _aut(args)
    res = A.act(ctx, seq, t)
    text = hopf.format_tensor(res)
    _emit(args, {"aut": fg.format_nielsen(seq), "input": hopf.format_tensor(t),
                 "result": hopf.tensor_to_json(res), "text": text},
          [["aut", "result"], [" ; ".join(fg.format_nielsen(seq)), text]])
    return EXIT_OK


def cmd_quotient_reduce(args) -> int:
    desc = _descriptor(args)
    t = hopf.parse_tensor(desc, args.tensor)
    q = A.QuotientModule(A.ActionContext(desc, t.arity))
    red = A.quotient_reduce(q, t)
    text = hopf.format_tensor(red)
    _emit(args, {"input": hopf.format_tensor(t), "reduced": hopf.tensor_to_json(red), "text": text,
                 "in_tilde": not red},
          [["reduced", "in_tilde"], [text, str(not red).lower()]])
    return EXIT_OK


def cmd_ef_defect(args) -> int:
    res = A.ef_defect(convention=args.convention)
    c = A.defect_coefficient(res)
    payload = {
        "convention": res.convention,
        "u": hopf.format_element(res.u),
        "coefficient": str(c),
        "expected_coefficient": "24",
        "matches_expected": c == 24,
        "nonzero": c != 0,
        "nilpotency": res.nilpotency,
    }
    _emit(args, payload)
    return EXIT_OK


def cmd_straighten(args) -> int:
    sc = pbw.straighten_constants(args.n, args.k)
    rows = [["i", "c", "d"]] + [[i, sc.c[i], sc.d[i]] for i in range(len(sc.c))]
    _emit(args, {"n": sc.n, "k": sc.k, "c": [str(v) for v in sc.c], "d": [str(v) for v in sc.d]}, rows)
    return EXIT_OK


def cmd_schur(args) -> int:
    lam = _partition(args.lambda_)
    if args.schur_cmd == "mult":
        other = _partition(args.mu, "--mu")
        res = symfunc.SchurPoly.s(*lam) * symfunc.SchurPoly.s(*other)
    elif args.schur_cmd == "wedge2":
        res = symfunc.schur_of_wedge2(lam)
    elif args.schur_cmd == "of-sum":
        triples = symfunc.schur_of_sum(lam)
        rows = [["mu", "nu", "mult"]] + [[",".join(map(str, m)) or "0", ",".join(map(str, n)) or "0", c] for m, n, c in triples]
        _emit(args, {"lambda": list(lam), "triples": [{"mu": list(m), "nu": list(n), "mult": c} for m, n, c in triples]}, rows)
        return EXIT_OK
    else:
        g = symfunc.schur_of_L2(lam)
        rows = [["degree", "lambda", "mult"]]
        for d in sorted(g):
            rows.extend(_schur_rows(g[d], d)[1:])
        _emit(args, {"lambda": list(lam), **g.to_json()}, rows)
        return EXIT_OK
    _emit(args, {"lambda": list(lam), **res.to_json()}, _schur_rows(res))
    return EXIT_OK


def cmd_quotient_char(args) -> int:
    lam = _partition(args.lambda_)
    if len(lam) > 2:
        raise UsageError("quotient-char takes a partition with at most two rows")
    p, q = (lam + (0, 0))[:2]
    d = args.dim if args.dim is not None else nilrep.required_dim(p, q, args.degree)
    try:
        res = nilrep.quotient_character(p, q, args.degree, d, method=args.method)
    except ValueError as e:
        raise UsageError(str(e))
    _emit(args, {"lambda": list(lam), "degree": args.degree, "dim": d, **res.to_json()}, _schur_rows(res))
    return EXIT_OK


def cmd_h1_table(args) -> int:
    entries = cokertab.h1_table(args.max_degree, max_excess=args.max_excess)
    if args.format == "tsv":
        sys.stdout.write(cokertab.entries_to_tsv(entries))
    else:
        _emit(args, {"max_module_degree": args.max_degree, "max_excess": args.max_excess,
                     "labels": "GL(V)", "entries": [e.to_json() for e in entries]})
    return EXIT_OK


def cmd_dims(args) -> int:
    if args.dims_cmd == "witt":
        payload = {"d": args.dim, "k": args.k, "dim": cokertab.witt_dim(args.dim, args.k)}
    elif args.dims_cmd == "dspace":
        payload = {"d": args.dim, "s": args.s, "dim": cokertab.d_space_dim(args.dim, args.s, explicit=args.explicit)}
    elif args.dims_cmd == "cyclic":
        payload = {"d": args.dim, "k": args.k, **asdict(cokertab.cyclic_word_dims(args.dim, args.k))}
    else:
        m, s = cokertab.modular_dims(args.weight)
        payload = {"weight": args.weight, "modular": m, "cusp": s}
    _emit(args, payload)
    return EXIT_OK


def cmd_verify(args) -> int:
    fn = verify.SUITES[args.suite]
    kwargs = {}
    if args.suite == "hopf-axioms":
        kwargs = {"dim": args.dim, "max_degree": args.max_degree if args.max_degree is not None else 5, "seed": args.seed}
    elif args.max_degree is not None and args.suite in ("relations-outf2", "inner-trivial"):
        kwargs = {"max_degree": args.max_degree}
    checks = fn(**kwargs)
    ok = all(c.ok for c in checks)
    rows = [["property", "ok", "detail"]] + [[c.name, str(c.ok).lower(), c.detail] for c in checks]
    _emit(args, {"suite": args.suite, "ok": ok, "seed": args.seed, "checks": [c.to_json() for c in checks]}, rows)
    for c in checks:
        if not c.ok:
            print(f"FAIL {c.name}: {c.detail} {json.dumps(c.counterexample)}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--seed", type=int, default=0)

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--algebra", choices=("tensor", "nil2"), default="tensor")
    alg.add_argument("--dim", type=int, default=2)
    alg.add_argument("--truncation", type=int, default=None)

    p = argparse.ArgumentParser(prog="hopfaut", description="Exact Hopf-algebra and Schur-functor computations.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hopf-eval", parents=[common, alg], help="evaluate a structure map on an element")
    s.add_argument("op", choices=("element", "coproduct", "antipode", "counit"))
    s.add_argument("expr")
    s.set_defaults(func=cmd_hopf_eval)

    s = sub.add_parser("act", parents=[common, alg], help="apply a Nielsen sequence to a tensor")
    s.add_argument("--aut", required=True, help='comma-separated, e.g. "leftmul 1 2, invert 2" or "eta"')
    s.add_argument("tensor", help='e.g. "x1 | x2"')
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("quotient-reduce", parents=[common, alg], help="normal form modulo the conjugation span")
    s.add_argument("tensor")
    s.set_defaults(func=cmd_quotient_reduce)

    s = sub.add_parser("ef-defect", parents=[common], help="E/F commutator defect on x^3 (x) y^3")
    s.add_argument("--convention", choices=sorted(A.LIFTS), default="upper")
    s.set_defaults(func=cmd_ef_defect)

    s = sub.add_parser("straighten", parents=[common], help="class-2 straightening constants")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_straighten)

    s = sub.add_parser("schur", help="symmetric-function operations")
    ssub = s.add_subparsers(dest="schur_cmd", required=True)
    for name, helptext in (("mult", "s_lambda * s_mu"), ("wedge2", "S_lambda(Lambda^2 V)"),
                           ("of-sum", "S_lambda(V + W) triples"), ("of-L2", "S_lambda(V + Lambda^2 V) by degree")):
        t = ssub.add_parser(name, parents=[common], help=helptext)
        t.add_argument("--lambda", dest="lambda_", required=True)
        if name == "mult":
            t.add_argument("--mu", required=True)
        t.set_defaults(func=cmd_schur)

    s = sub.add_parser("quotient-char", parents=[common], help="character of the quotient by the adjoint image")
    s.add_argument("--lambda", dest="lambda_", required=True, help="p,q")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--dim", type=int, default=None)
    s.add_argument("--method", choices=("alternating", "full"), default="alternating")
    s.set_defaults(func=cmd_quotient_char)

    s = sub.add_parser("h1-table", parents=[common], help="obstruction table")
    s.add_argument("--max-degree", type=int, default=12, help="maximal module degree")
    s.add_argument("--max-excess", type=int, default=1)
    s.set_defaults(func=cmd_h1_table)

    s = sub.add_parser("dims", help="dimension formulas")
    dsub = s.add_subparsers(dest="dims_cmd", required=True)
    t = dsub.add_parser("witt", parents=[common])
    t.add_argument("--dim", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t = dsub.add_parser("dspace", parents=[common])
    t.add_argument("--dim", type=int, required=True)
    t.add_argument("--s", type=int, required=True)
    t.add_argument("--explicit", action="store_true")
    t = dsub.add_parser("cyclic", parents=[common])
    t.add_argument("--dim", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t = dsub.add_parser("modular", parents=[common])
    t.add_argument("--weight", type=int, required=True)
    for t in dsub.choices.values():
        t.set_defaults(func=cmd_dims)

    s = sub.add_parser("verify", parents=[common], help="run a property suite")
    s.add_argument("suite", choices=sorted(verify.SUITES))
    s.add_argument("--dim", type=int, default=2)
    s.add_argument("--max-degree", type=int, default=None)
    s.set_defaults(func=cmd_verify)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    random.seed(args.seed)
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"hopfaut: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
