"""Compare greedy and exact feedback vertex set sizes on random strongly connected components.

    python scripts/greedy_vs_exact.py --trials 200 --max-size 20
"""

import argparse
import random
import statistics
import time

from groundkernel.digraph import DefGraph, induced_subgraph, scc
from groundkernel.mgs import exact_min_fvs_scc, greedy_fvs_scc


def random_component(rng, n, p):
    names = [f"v{i:02d}" for i in range(n)]
    arcs = [(u, v) for u in names for v in names if rng.random() < p]
    g = DefGraph(names, arcs)
    biggest = max(scc(g).components, key=len)
    return induced_subgraph(g, biggest)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--max-size", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    ratios = []
    exact_time = 0.0
    worse = 0
    done = 0
    while done < args.trials:
        n = rng.randint(4, args.max_size)
        comp = random_component(rng, n, rng.choice([0.1, 0.15, 0.25, 0.4]))
        if len(comp) < 2:
            continue
        t = time.perf_counter()
        opt = len(exact_min_fvs_scc(comp, exact_limit=args.max_size))
        exact_time += time.perf_counter() - t
        greedy = len(greedy_fvs_scc(comp))
        ratios.append(greedy / opt)
        worse += greedy > opt
        done += 1

    print(f"instances          {done}")
    print(f"greedy optimal     {done - worse} ({(done - worse) / done:.1%})")
    print(f"mean ratio         {statistics.mean(ratios):.4f}")
    print(f"max ratio          {max(ratios):.4f}")
    print(f"mean exact time    {exact_time / done * 1000:.2f} ms")


if __name__ == "__main__":
    main()
