"""Subset memory and one-point-deletion Hilbert behavior.

A subset W of Z "remembers" Z in degree m when every degree-m cone
through W automatically passes through all of Z. Separately, deleting
any single point of a certified configuration's projection leaves the
Hilbert function unchanged, which fails for the raw ambient points of
special examples.
"""

import random

from geproci.certify import cbp_ambient, geprocb, is_ci222_p4, remembers
from geproci.combinat import line_census
from geproci.configs import klein_memory, named
from geproci.field import make_field
from geproci.projgeom import ProjPoint, segre


def main():
    f4 = named("f4")
    four_line = next(v for v in line_census(f4).members.values()
                     if len(v) == 4)
    W = [q for q in f4.points if q not in four_line]
    dec = remembers(W, f4.points, 4, seed=1)
    print(f"20-point subset remembers all 24 points in degree 4: "
          f"{dec.verdict}")
    dec = remembers(klein_memory().points, named("klein").points, 6,
                    seed=1, probes=50)
    print(f"27-point subset remembers the 60-point set in degree 6: "
          f"{dec.verdict} ({dec.data['probes_failing']}/50 random probes "
          "escape the cones)")

    fs = make_field([])
    rng = random.Random(5)

    def rp(n):
        return ProjPoint.make([rng.randrange(fs.p) for _ in range(n)], fs.p)

    eleven = [segre(rp(2), rp(2)) for _ in range(10)] + [rp(4)]
    print("\n10 points on a quadric plus one general point:")
    print("  uniform deletion behavior after projection:",
          geprocb(eleven, seed=1).verdict)
    print("  uniform deletion behavior in the ambient space:",
          cbp_ambient(eleven, seed=1).verdict)

    pts = [rp(5) for _ in range(8)]
    print("\n8 random points in 4-space project to a (2,2,2) complete "
          "intersection:", is_ci222_p4(pts, seed=1).verdict)


if __name__ == "__main__":
    main()
