"""Unexpected cones: configurations whose degree-t cones through a
general point form a larger system than a naive dimension count allows.
"""

from geproci.configs import named, skeleton, unity_grid
from geproci.unexpected import adim, c_predicate, skeleton_f, verify_skeleton_T


def main():
    for label, ts in [("d4", (3, 4)), ("f4", (4, 6)), ("penrose", (5, 8))]:
        cfg = named(label)
        for t in ts:
            r = c_predicate(cfg, t, trials=1, seed=1)
            print(f"{label:8s} degree {t}: adim={r.adim:3d} vdim={r.vdim:4d}"
                  f"  unexpected={r.unexpected}")
    r = c_predicate(unity_grid(2, 4), 4, trials=1, seed=1)
    print(f"grid(2,4) degree 4: adim={r.adim} vdim={r.vdim}"
          f"  unexpected={r.unexpected}")

    print("\ncoordinate line skeletons, cubic cones:")
    for n in (4, 5, 6):
        print(f"  n={n}: adim = {adim(skeleton(n, n - 1), 3, 3, trials=1)}")
    print("excess f(m,n) for the codimension-2 skeleton:",
          {n: skeleton_f(12, n) for n in (2, 3, 4)})
    print("explicit permutation-sum hypersurface, n=4:",
          verify_skeleton_T(4)["ok"])

    print("\nnear-diagonal dimensions of the 13-ray plane configuration:",
          [adim(named("rays13"), d, d - 1, trials=1) for d in (5, 6, 7)])
    print("root-system table: E7 adim(4,4) =",
          adim(named("e7"), 4, 4, trials=1),
          "| E8 adim(4,4) =", adim(named("e8"), 4, 4, trials=1))


if __name__ == "__main__":
    main()
