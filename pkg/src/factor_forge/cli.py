"""Command-line front end.

Exit codes: 0 success / criterion holds, 1 negative verdict, 2 input error,
3 search budget exhausted.
"""
from __future__ import annotations

import argparse
import sys

from . import families
from .criteria import DEFAULT_CAP, CriterionError, DegreeBounds, DegreeSpec, criterion_exhaustive
from .graph import GraphError
from .instance import InstanceError, format_factor, format_instance, gstar_comments, read_instance
from .solver import BudgetExceeded, SearchBudget, SolverError, solve
from .suites import SUITES, SuiteError, run_suite
from .theorems import PreconditionError

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.max_nodes, max_time=args.max_time)


def _fmt_set(vs) -> str:
    return ",".join(str(v + 1) for v in sorted(vs))


def cmd_gen(args, out) -> int:
    fam = args.family
    comments = []
    if fam == "random-regular":
        G = families.random_regular(args.r, args.n, args.seed)
    elif fam == "near-regular":
        G = families.random_near_regular(args.r, args.n, args.k_extra, args.seed)
    elif fam == "gstar":
        L = families.gstar(args.r)
        G = L.graph
        comments = gstar_comments(L)
    elif fam == "complete":
        G = families.complete_graph(args.n)
    elif fam == "circulant":
        G = families.circulant(args.n, args.offsets or [])
    elif fam == "jgraph":
        G, a, b = families.j_graph(args.r)
        comments = [f"jgraph r={args.r} a={a + 1} b={b + 1}"]
    else:
        raise UsageError(f"unknown family {fam}")
    text = format_instance(G, comments=comments)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _bounds_from(args, inst) -> DegreeBounds:
    G = inst.graph
    if args.g is not None or args.f is not None:
        g = args.g if args.g is not None else 0
        f = args.f if args.f is not None else g
        return DegreeBounds.uniform(G.n, g, f)
    if inst.spec is None:
        raise UsageError("no --g/--f given and the instance carries no spec")
    return DegreeBounds([min(a) for a in inst.spec.allowed], [max(a) for a in inst.spec.allowed])


def cmd_check(args, out) -> int:
    inst = read_instance(args.instance)
    bounds = _bounds_from(args, inst)
    bounds.validate(inst.graph, parity=args.mode == "parity")
    w = criterion_exhaustive(inst.graph, bounds, args.mode, cap=args.cap)
    if w is None:
        out.write("HOLDS\n")
        return EXIT_OK
    out.write(f"WITNESS mode={w.mode}\n")
    out.write(f"S={_fmt_set(w.S)}\n")
    out.write(f"T={_fmt_set(w.T)}\n")
    out.write(f"value={w.value}\n")
    for comp in w.bad_components:
        out.write(f"component={_fmt_set(comp)}\n")
    return EXIT_NEGATIVE


def cmd_solve(args, out) -> int:
    inst = read_instance(args.instance)
    G = inst.graph
    if args.g is not None or args.f is not None:
        b = _bounds_from(args, inst)
        b.validate(G, parity=args.parity)
        spec = DegreeSpec.from_bounds(b, parity=args.parity)
    elif inst.spec is not None:
        spec = inst.spec
    else:
        raise UsageError("instance has no spec; add h lines or pass --g/--f")
    budget = _budget(args)
    try:
        F = solve(G, spec, args.method, budget)
    except BudgetExceeded:
        out.write(f"BUDGET nodes={budget.nodes}\n")
        return EXIT_BUDGET
    if F is None:
        out.write("INFEASIBLE\n")
        return EXIT_NEGATIVE
    out.write(format_factor(F))
    return EXIT_OK


def cmd_verify(args, out) -> int:
    rows = run_suite(args.suite, r=args.r, n=args.n, k=args.k, m=args.m, M=args.M,
                     seeds=args.seeds, budget=_budget(args))
    for row in rows:
        out.write(row.line() + "\n")
    passed = sum(row.status == "PASS" for row in rows)
    failed = sum(row.status == "FAIL" for row in rows)
    skipped = sum(row.status == "SKIP" for row in rows)
    out.write(f"SUMMARY suite={args.suite} pass={passed} fail={failed} skip={skipped}\n")
    if failed or passed == 0:
        return EXIT_NEGATIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="factor-forge", description="Graph factor toolkit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def budget_flags(sp):
        sp.add_argument("--max-nodes", type=int, default=10**9)
        sp.add_argument("--max-time", type=float, default=600.0)

    g = sub.add_parser("gen", help="write a graph instance")
    g.add_argument("family", choices=["random-regular", "near-regular", "gstar", "complete", "circulant", "jgraph"])
    g.add_argument("--r", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--k-extra", type=int, default=0)
    g.add_argument("--offsets", type=int, nargs="*")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--out")
    g.set_defaults(func=cmd_gen)

    c = sub.add_parser("check", help="evaluate the Lovasz criterion exhaustively")
    c.add_argument("instance")
    c.add_argument("--mode", choices=["gf", "parity"], default="gf")
    c.add_argument("--g", type=int)
    c.add_argument("--f", type=int)
    c.add_argument("--cap", type=int, default=DEFAULT_CAP)
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("solve", help="find a factor")
    s.add_argument("instance")
    s.add_argument("--method", choices=["auto", "matching", "exact"], default="auto")
    s.add_argument("--g", type=int)
    s.add_argument("--f", type=int)
    s.add_argument("--parity", action="store_true")
    budget_flags(s)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="run a theorem verification suite")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--r", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--M", type=int)
    v.add_argument("--seeds", type=int, default=10)
    budget_flags(v)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except (UsageError, InstanceError, GraphError, CriterionError, SolverError,
            PreconditionError, SuiteError, OSError, TypeError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
