"""Weak combinatorial equivalence: whether two point sets admit a
collinearity-preserving bijection, decided by staged invariants.

The three 30-point subsets of the same 36-point construction share
every naive census yet are pairwise distinguished by bipartite-graph
probes on their two-point-line graphs.
"""

from geproci.combinat import brianchon_points, line_census, weak_comb_equivalent
from geproci.configs import grid, unity_grid, z56


def main():
    z1, z2, z3 = z56(1), z56(2), z56(3)
    print("shared line census:", dict(sorted(line_census(z1).histogram.items())))
    for a, b, la, lb in [(z1, z2, "Z1", "Z2"), (z1, z3, "Z1", "Z3"),
                         (z2, z3, "Z2", "Z3")]:
        verdict, detail = weak_comb_equivalent(a, b)
        print(f"{la} vs {lb}: {verdict} (by {detail})")

    g1 = unity_grid(3, 3)
    g2 = grid(3, 3, [(1, 2), (1, 5), (2, 3)], [(1, 7), (3, 4), (1, 0)],
              g1.field)
    verdict, bijection = weak_comb_equivalent(g1, g2)
    print(f"\ntwo (3,3)-grids: {verdict}, bijection {bijection}")

    tri1, tri2 = brianchon_points(g1)
    print("concurrency points of the grid split into two collinear "
          f"triples of sizes {len(tri1)} and {len(tri2)}")


if __name__ == "__main__":
    main()
