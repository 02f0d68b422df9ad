"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 size limit exceeded,
4 an approximation guarantee was violated.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time
from fractions import Fraction
from pathlib import Path

from .cuts import EXACT_LIMIT, CutSolver, check_cut, cut_exact, cut_heuristic
from .decision_tree import cost_contribution, cost_pathsum, load_tree, tree_to_dict, validate
from .errors import GraphSearchError, GuaranteeViolation, NoCut, ParseError, TooLarge, ValidationError
from .instance import (
    gen_random_graph,
    gen_random_tree,
    hardness_reduction,
    load_instance,
    save_instance,
)
from .oracles import OPT_LIMIT, opt_cost, opt_decision_tree
from .separator import separator_bruteforce, separator_exact, separator_fptas
from .strategies import SolveStats, graph_bound_ok, solve_graph, solve_tree, tree_bound_ok

REPORT_FIELDS = ["instance", "n", "total_weight", "algorithm", "param", "cost", "opt", "ratio", "seed"]


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None


def _emit(data: bytes | str, out: str | None) -> None:
    if isinstance(data, str):
        data = data.encode()
    if out and out != "-":
        Path(out).write_bytes(data)
    else:
        sys.stdout.write(data.decode())


def _json(obj) -> str:
    return json.dumps(obj) + "\n"


# ------------------------------------------------------------------ gen

def cmd_gen(args) -> int:
    if args.kind == "tree":
        g = gen_random_tree(args.n, args.max_cost, args.max_weight, args.seed)
    elif args.kind == "graph":
        g = gen_random_graph(args.n, args.p, args.max_cost, args.max_weight, args.seed)
    else:
        if args.input is None:
            raise ValidationError("gen reduction needs --in")
        g, budget = hardness_reduction(load_instance(_read(args.input)), args.budget)
        print(f"reduced budget: {budget}", file=sys.stderr)
    _emit(save_instance(g), args.out)
    return 0


# ---------------------------------------------------------------- solve

def cmd_solve(args) -> int:
    g = load_instance(_read(args.input))
    stats = SolveStats()
    if args.algo == "oracle":
        if g.n > OPT_LIMIT:
            raise TooLarge(f"oracle refuses n = {g.n} > {OPT_LIMIT}")
        d, _ = opt_decision_tree(g)
    elif args.algo == "tree":
        d = solve_tree(g, args.epsilon, stats)
    else:
        d = solve_graph(g, CutSolver(args.solver, seed=args.seed), stats)
    record = {
        "algorithm": args.algo,
        "n": g.n,
        "total_weight": g.total_weight,
        "cost": cost_pathsum(g, d),
        **stats.as_dict(),
    }
    if args.algo == "tree":
        record["epsilon"] = str(args.epsilon)
    if args.algo == "graph":
        record["solver"] = args.solver
    _emit(_json({**tree_to_dict(d), "stats": record}), args.out)
    return 0


# ----------------------------------------------------------------- eval

def cmd_eval(args) -> int:
    g = load_instance(_read(args.input))
    d = load_tree(_read(args.tree))
    validate(g, d)
    a, b = cost_pathsum(g, d), cost_contribution(g, d)
    if a != b:
        raise GuaranteeViolation(f"path-sum cost {a} differs from contribution cost {b}")
    _emit(_json({"valid": True, "cost_pathsum": a, "cost_contribution": b}), args.out)
    return 0


# ------------------------------------------------------------ separator

def cmd_separator(args) -> int:
    g = load_instance(_read(args.input))
    if args.k is not None:
        res = separator_bruteforce(g, args.k) if args.bruteforce else separator_exact(g, args.k)
    elif args.delta is not None:
        res = separator_fptas(g, args.alpha, args.delta)
    else:
        k = math.floor(g.total_weight / args.alpha)
        res = separator_bruteforce(g, k) if args.bruteforce else separator_exact(g, k)
    out = {
        "separator": res.vertices,
        "cost": res.separator_cost,
        "max_component_weight": res.max_component_weight,
    }
    _emit(_json(out), args.out)
    return 0


# ------------------------------------------------------------------ cut

def cmd_cut(args) -> int:
    g = load_instance(_read(args.input))
    if g.n < 2:
        raise NoCut("a cut needs at least two vertices")
    if args.heuristic:
        cut = cut_heuristic(g, seed=args.seed)
    else:
        if g.n > EXACT_LIMIT:
            raise TooLarge(f"exact cut limited to {EXACT_LIMIT} vertices; use --heuristic")
        cut = cut_exact(g)
    check_cut(g, cut)
    _emit(_json(cut.as_dict()), args.out)
    return 0


# -------------------------------------------------------------- compare

def parse_sizes(text: str) -> list[int]:
    out: list[int] = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _list(text: str) -> list[str]:
    return [p.strip() for p in text.split(",") if p.strip()]


def run_suite(kind, sizes, seeds, epsilons, solvers, max_cost=1, max_weight=1, p=0.5, base_seed=0, timing=False):
    """Run every (instance, algorithm) pair; returns (rows, violations)."""
    rows = []
    violations = 0
    for n in sizes:
        for s in range(base_seed, base_seed + seeds):
            if kind == "tree":
                g = gen_random_tree(n, max_cost, max_weight, s)
            else:
                g = gen_random_graph(n, p, max_cost, max_weight, s)
            opt = opt_cost(g) if g.n <= OPT_LIMIT else None
            runs = []
            if kind == "tree":
                for eps in epsilons:
                    runs.append(("tree", str(eps), lambda eps=eps: solve_tree(g, eps), lambda c, eps=eps: tree_bound_ok(c, opt, eps)))
            for name in solvers:
                bound = (lambda c: graph_bound_ok(c, opt)) if name == "exact" else None
                runs.append(("graph", name, lambda name=name: solve_graph(g, CutSolver(name, seed=s)), bound))
            for algo, param, run, bound in runs:
                start = time.perf_counter()
                d = run()
                elapsed = (time.perf_counter() - start) * 1000
                cost = cost_pathsum(g, d)
                row = {
                    "instance": f"{kind}-n{n:03d}-s{s:04d}",
                    "n": g.n,
                    "total_weight": g.total_weight,
                    "algorithm": algo,
                    "param": param,
                    "cost": cost,
                    "opt": "" if opt is None else opt,
                    "ratio": "" if not opt else f"{cost / opt:.6f}",
                    "seed": s,
                }
                if timing:
                    row["runtime_ms"] = f"{elapsed:.3f}"
                if opt is not None and bound is not None and not bound(cost):
                    violations += 1
                    row["violation"] = True
                rows.append(row)
    rows.sort(key=lambda r: (r["instance"], r["algorithm"], r["param"]))
    return rows, violations


def render_csv(rows, timing=False) -> str:
    buf = io.StringIO()
    fields = REPORT_FIELDS + (["runtime_ms"] if timing else [])
    writer = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_compare(args) -> int:
    rows, violations = run_suite(
        args.kind,
        parse_sizes(args.sizes),
        args.seeds,
        [parse_rational(e) for e in _list(args.epsilons)],
        _list(args.solvers),
        args.max_cost,
        args.max_weight,
        args.p,
        args.seed,
        args.timing,
    )
    if args.format == "json":
        fields = REPORT_FIELDS + (["runtime_ms"] if args.timing else [])
        _emit(_json([{f: r[f] for f in fields} for r in rows]), args.out)
    else:
        _emit(render_csv(rows, args.timing), args.out)
    if violations:
        print(f"{violations} row(s) exceed their approximation bound", file=sys.stderr)
        return 4
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphsearch", description="Average-case graph search strategies")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", default=None, help="output file (default: stdout)")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("kind", choices=["tree", "graph", "reduction"])
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--p", type=float, default=0.5, help="edge probability for graphs")
    p.add_argument("--max-cost", type=int, default=1)
    p.add_argument("--max-weight", type=int, default=1)
    p.add_argument("--in", dest="input", default=None)
    p.add_argument("--budget", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="build a decision tree")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--algo", choices=["tree", "graph", "oracle"], default="graph")
    p.add_argument("--oracle", dest="algo", action="store_const", const="oracle")
    p.add_argument("--epsilon", type=parse_rational, default=Fraction(1, 2))
    p.add_argument("--solver", choices=["exact", "heuristic"], default="exact")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("eval", help="validate a decision tree and report its cost")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--tree", required=True)
    common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("separator", help="weighted alpha-separator of a tree")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--k", type=int, default=None, help="explicit component weight bound")
    p.add_argument("--alpha", type=parse_rational, default=Fraction(2))
    p.add_argument("--delta", type=parse_rational, default=None, help="use the bicriteria FPTAS")
    p.add_argument("--bruteforce", action="store_true")
    common(p)
    p.set_defaults(func=cmd_separator)

    p = sub.add_parser("cut", help="min-ratio vertex cut")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--heuristic", action="store_true")
    common(p)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("compare", help="approximation ratio sweep against the oracle")
    p.add_argument("--kind", choices=["tree", "graph"], default="tree")
    p.add_argument("--sizes", default="2-8", help="e.g. '2-10' or '3,5,7'")
    p.add_argument("--seeds", type=int, default=10, help="instances per size")
    p.add_argument("--epsilons", default="0.5")
    p.add_argument("--solvers", default="", help="cut solvers for the graph algorithm, e.g. 'exact,heuristic'")
    p.add_argument("--max-cost", type=int, default=1)
    p.add_argument("--max-weight", type=int, default=1)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--timing", action="store_true", help="add a runtime_ms column (output no longer reproducible)")
    common(p)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "kind", None) == "graph" and args.command == "compare" and not args.solvers:
        args.solvers = "exact"
    try:
        return args.func(args)
    except TooLarge as e:
        print(f"error: TooLarge: {e}", file=sys.stderr)
        return 3
    except GuaranteeViolation as e:
        print(f"error: GuaranteeViolation: {e}", file=sys.stderr)
        return 4
    except GraphSearchError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
