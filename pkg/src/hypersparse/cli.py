"""Command-line interface.

Exit codes: 0 success / check passed, 1 check failed, 2 input error.
Results go to stdout as JSON.
"""
import argparse
import json
import sys

import numpy as np

from . import gen as gen_mod
from .core import size
from .errors import InputError
from .io import read_hypergraph, read_labels, write_hypergraph
from .solvers import SolverParams, effective_resistance, graph_resistance_oracle, ssl_solve
from .sparsify import make_plan, sparsify
from .verify import (
    certificate_check_all_permutations, cut_check_exhaustive, resistance_check,
    spectral_check_random,
)


def _emit(payload, path=None):
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _params(args):
    return SolverParams(max_iters=args.max_iters, tol=args.tol)


def cmd_sparsify(args):
    G = read_hypergraph(args.input)
    H, report = sparsify(G, args.epsilon, args.seed, args.delta)
    write_hypergraph(H, args.output)
    payload = report.to_dict()
    payload["input"] = args.input
    payload["output"] = args.output
    _emit(payload, args.report)
    return 0


def _parse_pairs(text):
    pairs = []
    for chunk in text.split(","):
        try:
            s, t = (int(v) for v in chunk.split("-"))
        except ValueError:
            raise InputError(f"bad vertex pair {chunk!r}; expected 's-t'") from None
        pairs.append((s, t))
    return pairs


def _random_pairs(n, count, seed):
    if n < 2:
        raise InputError("need at least 2 vertices for resistance pairs")
    rng = np.random.default_rng(seed)
    return [tuple(int(v) for v in rng.choice(n, size=2, replace=False)) for _ in range(count)]


def cmd_verify(args):
    G = read_hypergraph(args.g)
    H = read_hypergraph(args.h)
    if args.check == "cut":
        report = cut_check_exhaustive(G, H, args.epsilon)
    elif args.check == "spectral":
        report = spectral_check_random(G, H, args.epsilon, args.trials, args.seed)
    elif args.check == "certificate":
        report = certificate_check_all_permutations(G, H, args.epsilon)
    else:
        pairs = (_parse_pairs(args.pairs) if args.pairs
                 else _random_pairs(G.n, 5, args.seed))
        report = resistance_check(G, H, args.epsilon, pairs, _params(args))
    payload = report.to_dict()
    payload["check"] = args.check
    payload["epsilon"] = args.epsilon
    payload["seed"] = args.seed
    _emit(payload, args.report)
    return 0 if report.passed else 1


def cmd_effres(args):
    G = read_hypergraph(args.input)
    if args.demo_edge is not None:
        value, Gpi = gen_mod.collapsed_resistance(G, args.demo_edge, args.s, args.t)
        _emit({"resistance": value, "method": "collapsed-oracle",
               "edge": args.demo_edge, "collapsed_edges": Gpi.m})
        return 0
    if args.oracle:
        if G.directed or any(len(e) != 2 for e in G.edges):
            raise InputError("--oracle needs a 2-uniform undirected input")
        _emit({"resistance": graph_resistance_oracle(G, args.s, args.t), "method": "oracle"})
        return 0
    res = effective_resistance(G, args.s, args.t, _params(args))
    _emit({"resistance": res.objective, "method": "subgradient",
           "iterations": res.iterations, "converged": res.converged})
    return 0


def cmd_ssl(args):
    G = read_hypergraph(args.input)
    labels = read_labels(args.labels, G.n)
    target = G
    payload = {}
    if args.sparsify_epsilon is not None:
        target, report = sparsify(G, args.sparsify_epsilon, args.seed)
        payload["sparsify"] = report.to_dict()
    res = ssl_solve(target, labels, _params(args))
    payload.update({"x": res.x.tolist(), "objective": res.objective,
                    "iterations": res.iterations, "converged": res.converged})
    _emit(payload)
    return 0


def _weight_dist(text):
    if text == "unit":
        return "unit"
    try:
        a, b = (float(v) for v in text.split(":"))
    except ValueError:
        raise InputError(f"bad weight spec {text!r}; expected 'unit' or 'a:b'") from None
    return ("uniform", a, b)


def cmd_gen(args):
    if args.kind == "random":
        spec = gen_mod.GenSpec("random-mixed" if args.mixed else "random-uniform",
                               args.n, args.m, args.r, _weight_dist(args.weights),
                               args.seed, args.directed)
    elif args.kind == "complete":
        spec = gen_mod.GenSpec("complete-graph", args.n, weight_dist=_weight_dist(args.weights),
                               seed=args.seed)
    else:
        spec = gen_mod.GenSpec("appendix", args.nu, r=args.r)
    G = gen_mod.gen(spec)
    write_hypergraph(G, args.output)
    _emit({"kind": spec.kind, "n": G.n, "m": G.m, "output": args.output})
    return 0


def cmd_stats(args):
    G = read_hypergraph(args.input)
    delta = args.delta if args.delta is not None else 1.0 / (2 * max(G.n, 1))
    plan = make_plan(G, args.epsilon, delta)
    _emit({"n": G.n, "m": G.m, "size": size(G), "directed": G.directed,
           "sum_p": plan.sum_p, "K": plan.K, "epsilon": args.epsilon, "delta": delta,
           "expected_retained": plan.K * plan.sum_p})
    return 0


def _solver_flags(p):
    p.add_argument("--max-iters", type=int, default=SolverParams.max_iters)
    p.add_argument("--tol", type=float, default=SolverParams.tol)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hypersparse", description="Spectral sparsification of hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sparsify", help="sparsify a hypergraph file")
    p.add_argument("--input", required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--delta", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_sparsify)

    p = sub.add_parser("verify", help="check that H approximates G")
    p.add_argument("check", choices=["cut", "spectral", "certificate", "resistance"])
    p.add_argument("--g", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pairs", help="resistance pairs as 's-t,s-t'; default 5 random")
    p.add_argument("--report")
    _solver_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("effres", help="effective resistance between two vertices")
    p.add_argument("--input", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="Laplacian solve (graphs only)")
    p.add_argument("--demo-edge", type=int,
                   help="resistance in the collapse that isolates this hyperedge")
    _solver_flags(p)
    p.set_defaults(func=cmd_effres)

    p = sub.add_parser("ssl", help="semi-supervised label completion")
    p.add_argument("--input", required=True)
    p.add_argument("--labels", required=True)
    p.add_argument("--sparsify-epsilon", type=float)
    p.add_argument("--seed", type=int, default=0)
    _solver_flags(p)
    p.set_defaults(func=cmd_ssl)

    p = sub.add_parser("gen", help="generate an instance")
    gsub = p.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--r", type=int, default=3)
    g.add_argument("--mixed", action="store_true", help="random edge sizes up to r")
    g.add_argument("--directed", action="store_true")
    g.add_argument("--weights", default="unit", help="'unit' or 'a:b' for uniform(a, b)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", required=True)
    g = gsub.add_parser("complete")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--weights", default="unit")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--output", required=True)
    g = gsub.add_parser("appendix")
    g.add_argument("--nu", type=int, required=True)
    g.add_argument("--r", type=int, required=True)
    g.add_argument("--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="size and sampling statistics")
    p.add_argument("--input", required=True)
    p.add_argument("--epsilon", type=float, default=0.5)
    p.add_argument("--delta", type=float)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"hypersparse: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
