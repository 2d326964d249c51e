"""Certify that general projections of point configurations are complete
intersections of plane curves.

Each check projects the points from a few random vertices over a large
prime field, computes the dimensions of the image ideal in the two
degrees, and certifies coprimality of the candidate curves.
"""

from geproci import is_geproci
from geproci.configs import extend_standard, named, std_construction

CHECKS = [
    ("d4", named("d4"), 3, 4),
    ("f4", named("f4"), 4, 6),
    ("std(4,Y1)", std_construction(4, "Y1"), 4, 5),
    ("std(4,Y1Y2)", std_construction(4, "Y1Y2"), 4, 6),
    ("extend(std(3,Y1))", extend_standard(std_construction(3, "Y1")), 4, 4),
    ("half_penrose", named("half_penrose"), 4, 5),
    ("penrose", named("penrose"), 5, 8),
    ("klein", named("klein"), 6, 10),
]


def main():
    for label, cfg, a, b in CHECKS:
        dec = is_geproci(cfg.points, a, b, trials=3, seed=1)
        print(f"{label:24s} ({a},{b}): {dec.verdict}"
              f"   [{len(cfg.points)} points, prime {dec.prime}]")


if __name__ == "__main__":
    main()
