"""Kochen-Specker ray families: orthogonality graphs over two primes
and exhaustive search for 0/1 truth assignments.

A family is a KS set when no assignment marks exactly one ray true in
every maximal set of mutually orthogonal rays while never marking two
orthogonal rays true together.
"""

import time

from geproci.configs import Configuration, named
from geproci.field import make_field
from geproci.ks import is_ks_set, ortho_graph
from geproci.projgeom import ProjPoint


def main():
    for label in ("rays13", "rays21", "peres33", "penrose"):
        cfg = named(label)
        g = ortho_graph(cfg)
        start = time.monotonic()
        verdict = is_ks_set(g)
        dt = time.monotonic() - start
        print(f"{label:9s} rays={len(cfg.points):3d} edges={len(g.edges):4d} "
              f"bases={len(g.bases):3d} cliques={len(g.max_cliques):3d} "
              f"KS={verdict}  ({dt:.2f}s)")

    fs = make_field([])
    basis = Configuration("basis", 3, fs, [
        ProjPoint.make([1 if j == i else 0 for j in range(4)], fs.p)
        for i in range(4)])
    print("a single orthogonal basis: KS =", is_ks_set(basis))


if __name__ == "__main__":
    main()
