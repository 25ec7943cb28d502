"""Time the numba kernels against their numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Each kernel is run once per backend before timing so numba compilation is
excluded. Reported times are the best of ``--repeat`` runs, in milliseconds.
"""
import argparse
import itertools
import json
import time

import numpy as np

from hypersparse.gen import GenSpec, gen
from hypersparse.kernels import backend
from hypersparse.verify import _masks


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return 1e3 * min(times)


def cases(seed):
    rng = np.random.default_rng(seed)
    U = gen(GenSpec("random-uniform", 7, 150, 3, seed=seed))
    D = gen(GenSpec("random-mixed", 16, 150, 2, seed=seed, directed=True))
    big = gen(GenSpec("random-mixed", 200, 2000, 5, seed=seed))
    X = rng.standard_normal((2000, big.n))
    x = rng.standard_normal(big.n)
    perms = np.array(list(itertools.permutations(range(7))), dtype=np.int64)
    H = U.reweighted(U.weights * rng.uniform(0.9, 1.1, U.m))
    tmask, hmask = _masks(D)

    def run(k, name):
        if name == "quad_forms":
            return lambda: k.quad_forms(*big.arrays, X)
        if name == "subgradient":
            return lambda: k.subgradient(*big.arrays, x)
        if name == "codegree":
            return lambda: k.codegree(big.n, *big.arrays)
        if name == "min_pair_codegree":
            d = k.codegree(big.n, *big.arrays)
            return lambda: k.min_pair_codegree(*big.arrays[:4], d, False)
        if name == "cut_values":
            return lambda: k.cut_values(tmask, hmask, D.weights, D.n)
        if name == "certificate_scan":
            return lambda: k.certificate_scan(perms, U.arrays, H.arrays, 0.4)
        if name == "minimize":
            c = np.zeros(U.n)
            c[0], c[1] = 2.0, -2.0
            free = np.ones(U.n, dtype=np.bool_)
            free[1] = False
            return lambda: k.minimize(*U.arrays, c, free, np.zeros(U.n), 1e-3, 5000, 1e-9, 50)
        raise KeyError(name)

    return run


NAMES = ["quad_forms", "subgradient", "codegree", "min_pair_codegree", "cut_values",
         "certificate_scan", "minimize"]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--only", nargs="*", choices=NAMES)
    ap.add_argument("--json", help="also write results to this file")
    args = ap.parse_args(argv)

    run = cases(args.seed)
    impls = {name: backend(name) for name in ("numba", "numpy")}
    rows = []
    print(f"{'kernel':20s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name in args.only or NAMES:
        t = {b: best_of(run(k, name), args.repeat) for b, k in impls.items()}
        rows.append({"kernel": name, "numba_ms": t["numba"], "numpy_ms": t["numpy"]})
        print(f"{name:20s} {t['numba']:10.3f} {t['numpy']:10.3f} "
              f"{t['numpy'] / t['numba']:7.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
