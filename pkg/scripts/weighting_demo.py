#!/usr/bin/env python3
"""Build four-label proper-sum weightings on a gallery of graphs and show
the induced sums, plus two-label constructions where they apply."""

import argparse

from factorweight import (
    induced_coloring,
    is_adjacent_vd,
    is_vertex_coloring,
    vc2_bipartite,
    vertex_coloring_weighting_zr,
)
from factorweight.avd import advd2_bipartite_delta6
from factorweight.generators import (
    complete,
    complete_bipartite,
    cycle,
    petersen,
    random_planar_triangulation,
    wheel,
)


def show_group(name, g, r):
    w = vertex_coloring_weighting_zr(g, r)
    sums = induced_coloring(g, w)
    ok = is_vertex_coloring(g, w)
    print(f"{name:22s} n={g.n:3d} m={g.m:3d} labels 1..{r}  proper={ok}")
    if g.n <= 12:
        print(f"{'':22s} sums: {sums}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    show_group("complete K4", complete(4), 4)
    show_group("wheel, 5-cycle rim", wheel(5), 4)
    show_group("petersen", petersen(), 3)
    show_group("odd cycle C7", cycle(7), 3)
    for i in range(3):
        g = random_planar_triangulation(15 + 5 * i, seed=args.seed + i)
        show_group(f"planar triang. #{i}", g, 4)

    g = complete_bipartite(7, 7)
    w = advd2_bipartite_delta6(g)
    print(f"{'K_7,7 two labels':22s} n={g.n:3d} m={g.m:3d} "
          f"neighbor-distinguishing={is_adjacent_vd(g, w)}")

    c4 = cycle(4)
    w = vc2_bipartite(c4)
    print(f"{'C4 two labels':22s} n={c4.n:3d} m={c4.m:3d} "
          f"proper={is_vertex_coloring(c4, w)} sums={induced_coloring(c4, w)}")


if __name__ == "__main__":
    main()
