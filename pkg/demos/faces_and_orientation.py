"""What a 3D curve shows on its faces, and how its orientation evolves.

A harmonious Hilbert cube shows the 2D curve on every front face. The
Butz-Moore cube does so only at the first level. Orientation tracks which
axis permutations show up in the subregions as we go deeper.
"""
from sfcurves import (Face, butzmoore_inconsistency_witness,
                      check_neutral_orientation, check_shows,
                      make_standard_hilbert, make_ternary)


def main():
    for family in ("harmonious", "butz-moore"):
        cube, square = make_standard_hilbert(family, 3), make_standard_hilbert(family, 2)
        for depth in (1, 2, 3):
            ok = all(check_shows(cube, square, Face(i, 0), depth).passed for i in range(3))
            print(f"{family:>11} depth {depth}: front faces show the square curve: {ok}")
    print("butz-moore witness:", butzmoore_inconsistency_witness(depth=2))
    print()
    for family, make in [("harmonious", make_standard_hilbert), ("meurthe", make_ternary),
                         ("peano", make_ternary), ("coil", make_ternary)]:
        result = check_neutral_orientation(make(family, 3))
        print(f"{family:>11}: neutral={result.neutral} closure_depth={result.closure_depth} "
              f"reachable={len(result.reachable)}")


if __name__ == "__main__":
    main()
