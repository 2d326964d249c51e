"""Determinantal loci of point sets: degrees, a fully reducible example,
and rank-drop membership tests.

For a square evaluation matrix of a point set plus a fat vertex, the
determinant cuts out a hypersurface in the vertex. Its degree is found
by interpolating along random lines; membership of a specific vertex is
a rank comparison against a generic one.
"""

import random

from geproci.configs import unity_grid
from geproci.field import make_field
from geproci.projgeom import ProjPoint, cross_ratio
from geproci import weddle

FS = make_field([])
P = FS.p


def rand_pts(rng, count, nvars):
    return [ProjPoint.make([rng.randrange(P) for _ in range(nvars)], P)
            for _ in range(count)]


def main():
    rng = random.Random(7)
    print("degree for 6 random points in 3-space, d=2:",
          weddle.weddle_degree(rand_pts(rng, 6, 4), 2))
    print("degree for 10 random points in 4-space, d=2:",
          weddle.weddle_degree(rand_pts(rng, 10, 5), 2))
    print("degree for 10 random points in 3-space, d=3:",
          weddle.weddle_degree(rand_pts(rng, 10, 4), 3))
    print("a (2,3)-grid:",
          weddle.weddle_degree(unity_grid(2, 3).points, 2))

    # the six-point family whose surface splits into four planes
    a, b, c = 3, 5, 7
    lam = weddle.verify_reducible_weddle(a, b, c, P, samples=200)
    print(f"\nreducible family (a,b,c)=({a},{b},{c}): det = "
          f"{lam} * 2xyz(bcx+acy+abz-2abcw) at 200 samples")
    pts = weddle.reducible_weddle_points(a, b, c, P)
    O = ProjPoint.make([0, 0, 0, 1], P)
    H = ProjPoint.make([2 * a, 0, 0, 1], P)
    print("harmonic point on the surface:", weddle.weddle_member(pts, 2, H),
          "| cross ratio with the vertex:",
          "-1" if cross_ratio(pts[0], pts[3], O, H) == P - 1 else "other")

    # five points: the locus contains every line through two of them
    five = rand_pts(rng, 5, 4)
    q1, q2 = five[0], five[1]
    probe = ProjPoint.make(
        [(x + 5 * y) % P for x, y in zip(q1.coords, q2.coords)], P)
    print("\npoint on a pair line of 5 points is a member:",
          weddle.weddle_member(five, 2, probe))
    print("random point is a member:",
          weddle.weddle_member(five, 2, rand_pts(rng, 1, 4)[0]))


if __name__ == "__main__":
    main()
