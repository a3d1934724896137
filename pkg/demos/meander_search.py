"""Search for the 3x3 outer curve used when composing ternary curves.

We want a curve on the 3x3 grid that stays vertex-continuous, crosses the
bottom edge and the diagonal in order, and enters at the origin. The
search walks all king-move paths, assigns a rotation/reflection per cell
so the gates chain up, then filters by the properties.
"""
import itertools

from sfcurves import CurveSpec, check_monotone, check_vertex_continuity, make_h3
from sfcurves.compose import H3_SEGMENTS

TRANSFORMS = [(a, m) for a in ((0, 1), (1, 0)) for m in itertools.product((0, 1), repeat=2)]


def image(cell, t, corner):
    a, m = t
    return tuple(cell[i] + (1 - corner[a[i]] if m[i] else corner[a[i]]) for i in range(2))


def paths(path):
    if len(path) == 9:
        yield list(path)
        return
    x, y = path[-1]
    for dx, dy in itertools.product((-1, 0, 1), repeat=2):
        nxt = (x + dx, y + dy)
        if nxt != (x, y) and 0 <= nxt[0] < 3 and 0 <= nxt[1] < 3 and nxt not in path:
            path.append(nxt)
            yield from paths(path)
            path.pop()


def candidates():
    for exit_corner in ((1, 0), (0, 1), (1, 1)):
        for path in paths([(0, 0)]):
            stack = [(0, (0, 0), [])]
            while stack:
                k, gate, chosen = stack.pop()
                if k == 9:
                    if gate == (3 * exit_corner[0], 3 * exit_corner[1]):
                        yield CurveSpec(2, 3, tuple(path), tuple(t[0] for t in chosen),
                                        tuple(t[1] for t in chosen))
                    continue
                for t in TRANSFORMS:
                    if image(path[k], t, (0, 0)) == gate:
                        stack.append((k + 1, image(path[k], t, exit_corner), chosen + [t]))


def edge_connected(spec):
    locs = spec.locations
    return all(sum(abs(a - b) for a, b in zip(u, v)) == 1 for u, v in zip(locs, locs[1:]))


def main():
    found = list(candidates())
    good = [s for s in found
            if check_vertex_continuity(s, 3).passed
            and all(check_monotone(s, a, b, 3).passed for a, b in H3_SEGMENTS)]
    meanders = [s for s in good if edge_connected(s)]
    print(f"{len(found)} gate-consistent curves, {len(good)} pass the checks, "
          f"{len(meanders)} move only between edge neighbours")
    for s in meanders:
        print("   ", s.locations)
    print("shipped:", make_h3().locations)


if __name__ == "__main__":
    main()
