"""Classify configurations as grids, half grids or neither, and print
their exact line and plane censuses."""

from geproci import detect_grid, line_census, plane_census
from geproci.configs import named, unity_grid


def main():
    sets = {
        "grid(3,4)": unity_grid(3, 4),
        "d4": named("d4"),
        "f4": named("f4"),
        "penrose": named("penrose"),
        "h4": named("h4"),
    }
    for label, cfg in sets.items():
        kind, ab, _ = detect_grid(cfg.points, seed=1)
        shape = f" {ab}" if ab else ""
        print(f"{label:12s} -> {kind}{shape}")
    print()
    for label in ("d4", "f4", "half_penrose"):
        cfg = named(label)
        print(f"{label} lines:  {dict(sorted(line_census(cfg).histogram.items()))}")
    cfg = named("d4")
    print(f"d4 planes: {dict(sorted(plane_census(cfg).histogram.items()))}")


if __name__ == "__main__":
    main()
