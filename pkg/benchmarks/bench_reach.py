#!/usr/bin/env python3
"""Compare the compiled reachability kernel against the pure fallback.

Builds random digraphs of growing size and times the reflexive-transitive
closure, which is the inner loop behind every order query and closure
enumeration.  At the toy sizes the worked examples use, either backend is
instant; the compiled kernel is what keeps large taxonomies loadable.

    python3 benchmarks/bench_reach.py [--sizes 100,200,400,800] [--repeat 3]
"""

import argparse
import random
import time

from vplogic._kernel import reach_py

try:
    from vplogic._kernel import _reach
except ImportError:
    _reach = None


def random_graph(rng, n, avg_degree=4):
    return [
        (rng.randrange(n), rng.randrange(n)) for _ in range(n * avg_degree)
    ]


def bench(fn, n, edges, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(n, edges)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100,200,400,800")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = random.Random(args.seed)

    print(f"{'nodes':>7} {'edges':>7} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}")
    for n in sizes:
        edges = random_graph(rng, n)
        pure = bench(reach_py.reach_closure, n, edges, args.repeat)
        if _reach is None:
            print(f"{n:>7} {len(edges):>7} {pure:>10.4f} {'n/a':>13} {'n/a':>8}")
            continue
        compiled = bench(_reach.reach_closure, n, edges, args.repeat)
        assert _reach.reach_closure(n, edges) == reach_py.reach_closure(n, edges)
        print(
            f"{n:>7} {len(edges):>7} {pure:>10.4f} {compiled:>13.4f} "
            f"{pure / compiled:>7.1f}x"
        )
    if _reach is None:
        print("compiled kernel not built; install with the Cython extension to compare")


if __name__ == "__main__":
    main()
