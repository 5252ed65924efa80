#!/usr/bin/env python3
"""Survey the factor solver across random instances of each preset.

Prints one row per configuration: instances solved, move counts, wall time.
"""

import argparse
import math
import random
import time
from fractions import Fraction

from factorweight import (
    bipartite_two_value_spec,
    bipartition,
    pair_spec,
    solve_list_factor,
    triple_spec,
    validate_spec,
)
from factorweight.generators import random_bipartite, random_with_min_degree


def survey_pair(rng, trials, n_max):
    rows = []
    for trial in range(trials):
        n = rng.randint(6, n_max)
        g = random_with_min_degree(n, rng.uniform(0.4, 0.8), 2, seed=trial)
        lows = [math.ceil(g.degree(v) / 3) for v in range(n)]
        highs = [math.ceil(g.degree(v) / 2) for v in range(n)]
        if any(lows[v] > g.degree(v) // 2 or highs[v] > 2 * g.degree(v) // 3
               for v in range(n)):
            continue
        spec = pair_spec(g, lows, highs)
        if not validate_spec(g, spec).hypotheses_hold:
            continue
        moves = []
        t0 = time.perf_counter()
        sol = solve_list_factor(g, spec, on_move=lambda s: moves.append(1))
        rows.append((n, g.m, len(moves), time.perf_counter() - t0, sol.satisfies(g, spec)))
    return rows


def survey_triple(rng, trials, n_max):
    rows = []
    for trial in range(trials):
        n = rng.randint(12, n_max)
        g = random_with_min_degree(n, 0.5, 10, seed=trial)
        a1 = [rng.randint(math.ceil(3 * g.degree(v) / 10), 4 * g.degree(v) // 10) for v in range(n)]
        a2 = [rng.randint(math.ceil(4 * g.degree(v) / 10), 6 * g.degree(v) // 10) for v in range(n)]
        a3 = [rng.randint(math.ceil(6 * g.degree(v) / 10), 7 * g.degree(v) // 10) for v in range(n)]
        spec = triple_spec(g, a1, a2, a3)
        moves = []
        t0 = time.perf_counter()
        sol = solve_list_factor(g, spec, on_move=lambda s: moves.append(1))
        rows.append((n, g.m, len(moves), time.perf_counter() - t0, sol.satisfies(g, spec)))
    return rows


def survey_two_value(rng, trials, n_max):
    rows = []
    for trial in range(trials):
        nx = rng.randint(7, n_max // 2)
        ny = rng.randint(7, n_max // 2)
        g = random_bipartite(nx, ny, rng.uniform(0.4, 0.8), 6, seed=trial)
        bip = bipartition(g)
        ylo = [g.degree(v) // 2 - 1 for v in range(g.n)]
        yhi = [g.degree(v) // 2 + 2 for v in range(g.n)]
        spec = bipartite_two_value_spec(g, bip, ylo, yhi, Fraction(1, 2))
        moves = []
        t0 = time.perf_counter()
        sol = solve_list_factor(g, spec, on_move=lambda s: moves.append(1))
        rows.append((g.n, g.m, len(moves), time.perf_counter() - t0, sol.satisfies(g, spec)))
    return rows


def show(name, rows):
    solved = sum(1 for r in rows if r[4])
    if not rows:
        print(f"{name:10s}  no eligible instances")
        return
    avg_moves = sum(r[2] for r in rows) / len(rows)
    total = sum(r[3] for r in rows)
    print(f"{name:10s}  {solved}/{len(rows)} solved   "
          f"avg moves {avg_moves:6.1f}   total {total:6.2f}s")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"trials={args.trials} n_max={args.n_max} seed={args.seed}")
    show("pair", survey_pair(rng, args.trials, args.n_max))
    show("triple", survey_triple(rng, args.trials, args.n_max))
    show("two-value", survey_two_value(rng, args.trials, args.n_max))


if __name__ == "__main__":
    main()
