"""Command line front end: ``sfcurves <command> ...``.

Exit codes: ``compare`` returns 0 for p<q, 1 for q<p and 2 for p=q.
Other commands return 0 on success and 1 when a verification check
fails. Usage errors return 64 and malformed input data returns 65.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable, Sequence

from . import compose, hilbert, ternary
from .curvespec import (CurveSpec, SpecError, emit_table, expand_order,
                        format_table)
from .digits import DigitError, parse_number, parse_point
from .verify import (Face, check_monotone, check_neutral_orientation,
                     check_shows, check_vertex_continuity, visible_order)

EX_USAGE = 64
EX_DATAERR = 65

CURVES = ternary.FAMILIES + hilbert.FAMILIES + ("composed",)
FAMILIES = ternary.FAMILIES + hilbert.FAMILIES


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class Curve:
    """A selected curve with its base, spec builder and comparators."""

    tag: str
    dim: int
    inner: str | None = None
    outer: str | None = None

    @property
    def base(self) -> int:
        if self.tag == "composed":
            return compose.inner_base(self.inner)
        return 3 if self.tag in ternary.FAMILIES else 2

    def spec(self) -> CurveSpec:
        if self.tag in ternary.FAMILIES:
            return ternary.make_ternary(self.tag, self.dim)
        if self.tag in hilbert.FAMILIES:
            return hilbert.make_standard_hilbert(self.tag, self.dim)
        inner = _family_spec(self.inner, self.dim // 2)
        witness = compose.find_symmetry(inner)
        if witness is None:
            raise UsageError(f"{self.inner} in {self.dim // 2}D has no reversal symmetry, "
                             "so the composed curve has no rule table")
        return compose.derive_composed_spec(inner, witness)

    def comparator(self, mode: str, precision: int) -> tuple[Callable[[str], object], Callable[[object, object], bool]]:
        b = self.base
        if mode == "unit":
            parse = lambda text: _checked_dim(parse_point(text, b, precision), self.dim)
            if self.tag in ternary.FAMILIES:
                return parse, lambda p, q: ternary.compare_ternary(p, q, self.tag)
            if self.tag in hilbert.FAMILIES:
                return parse, lambda p, q: hilbert.compare_binary(p, q, self.tag)
            return parse, lambda p, q: compose.compare_composed(p, q, self.inner, self.outer)
        if self.tag == "composed":
            raise UsageError("composed curves only take points in the unit cube")
        if mode == "signed" and self.tag not in ternary.FAMILIES:
            raise UsageError("signed mode is only defined for the ternary families")
        parse = lambda text: _checked_dim([parse_number(t, b) for t in text.split(",")], self.dim)
        if mode == "signed":
            return parse, lambda p, q: ternary.compare_ternary_signed(p, q, self.tag, precision)
        if self.tag in ternary.FAMILIES:
            return parse, lambda p, q: ternary.compare_ternary_nonneg(p, q, self.tag, precision)
        return parse, lambda p, q: hilbert.compare_binary_nonneg(p, q, self.tag, precision)


def _checked_dim(point, dim: int):
    if len(point) != dim:
        raise DigitError(f"expected {dim} coordinates, got {len(point)}")
    return point


def _family_spec(tag: str, d: int) -> CurveSpec:
    if tag in ternary.FAMILIES:
        return ternary.make_ternary(tag, d)
    return hilbert.make_standard_hilbert(tag, d)


def _curve(args) -> Curve:
    tag = args.curve
    if tag == "composed":
        if not args.inner:
            raise UsageError("--curve composed needs --inner")
        if args.dim % 2:
            raise UsageError("composed curves have an even dimension")
        inner = args.inner
        try:
            base = compose.inner_base(inner)
        except SpecError as exc:
            raise UsageError(str(exc)) from None
        outer = args.outer or f"h{base}"
        if outer != f"h{base}":
            raise UsageError(f"--outer {outer} does not match the base-{base} inner curve")
        return Curve(tag, args.dim, inner, outer)
    if args.inner or args.outer:
        raise UsageError("--inner/--outer only apply to --curve composed")
    return Curve(tag, args.dim)


def _add_curve_args(p: argparse.ArgumentParser, modes: bool = True):
    p.add_argument("--curve", choices=CURVES, required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--inner", choices=FAMILIES)
    p.add_argument("--outer", choices=("h2", "h3"))
    if modes:
        p.add_argument("--mode", choices=("unit", "nonneg", "signed"), default="unit")
        p.add_argument("--precision", type=int, default=20)


def _read_lines(path: str | None) -> list[str]:
    if path in (None, "-"):
        return sys.stdin.read().splitlines()
    with open(path) as fh:
        return fh.read().splitlines()


def _sort_lines(lines: Sequence[str], parse, less) -> list[str]:
    items = []
    for n, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            items.append((line, parse(line.strip())))
        except (DigitError, SpecError, ValueError) as exc:
            raise DigitError(f"line {n}: {exc}") from None

    def cmp(a, b):
        if less(a[1], b[1]):
            return -1
        if less(b[1], a[1]):
            return 1
        return 0

    return [line for line, _ in sorted(items, key=cmp_to_key(cmp))]


def cmd_compare(args) -> int:
    parse, less = _curve(args).comparator(args.mode, args.precision)
    try:
        p, q = parse(args.p), parse(args.q)
    except (DigitError, SpecError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    if less(p, q):
        print("p<q")
        return 0
    if less(q, p):
        print("q<p")
        return 1
    print("p=q")
    return 2


def cmd_sort(args) -> int:
    parse, less = _curve(args).comparator(args.mode, args.precision)
    for line in _sort_lines(_read_lines(args.input), parse, less):
        print(line)
    return 0


def cmd_rect_sort(args) -> int:
    try:
        base = compose.inner_base(args.inner)
    except SpecError as exc:
        raise UsageError(str(exc)) from None
    outer = args.outer or f"h{base}"
    if outer != f"h{base}":
        raise UsageError(f"--outer {outer} does not match the base-{base} inner curve")

    def parse(line):
        rect = compose.Rectangle.parse(line)
        return compose.rect_to_point(rect, args.rect_mode, base, args.precision)

    less = lambda p, q: compose.compare_composed(p, q, args.inner, outer)
    for line in _sort_lines(_read_lines(args.input), parse, less):
        print(line)
    return 0


def cmd_table(args) -> int:
    spec = _curve(args).spec()
    sys.stdout.write(format_table(emit_table(spec)))
    return 0


def svg_document(cells, side: int) -> str:
    pts = " ".join(f"{(x + 0.5) / side:.6f},{1 - (y + 0.5) / side:.6f}" for x, y in cells)
    return ('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1" width="512" height="512">\n'
            f'<polyline fill="none" stroke="black" stroke-width="{0.25 / side:.6f}" '
            f'stroke-linejoin="round" points="{pts}"/>\n'
            '</svg>\n')


def cmd_svg(args) -> int:
    curve = _curve(args)
    spec = curve.spec()
    if spec.dim == 2 and args.face is None:
        cells = expand_order(spec, args.depth)
    elif spec.dim == 3 and args.face is not None:
        face = Face.parse(args.face)
        if face.axis >= 3:
            raise UsageError(f"face axis {face.axis} out of range")
        cells = visible_order(spec, face, args.depth)
    elif spec.dim == 2:
        raise UsageError("--face only applies to 3D curves")
    else:
        raise UsageError("svg draws 2D curves, or one face of a 3D curve with --face i:k")
    doc = svg_document(cells.tolist(), spec.base ** args.depth)
    if args.output in (None, "-"):
        sys.stdout.write(doc)
    else:
        with open(args.output, "w") as fh:
            fh.write(doc)
    return 0


# ---------------------------------------------------------------------------
# verification suites


def _line(family, d, check, params, ok, witness="") -> tuple[str, bool]:
    return "\t".join([family, str(d), check, params, "PASS" if ok else "FAIL", str(witness or "")]), ok


def _face_plan(family: str, d: int):
    """Faces to check and the transform each is expected to show."""
    if family in ternary.FAMILIES:
        return [(Face(i, k), None) for i in range(d) for k in (0, 1)]
    plan = [(Face(i, 0), None) for i in range(d)]
    if family == "harmonious":
        plan += [(Face(i, 1), i) for i in range(d - 1)]
    return plan


def suite_consistency(families, dmax, depth):
    for fam in families:
        for d in range(2, dmax + 1):
            spec, lower = _family_spec(fam, d), _family_spec(fam, d - 1)
            for face, mirror in _face_plan(fam, d):
                res = check_shows(spec, lower, face, depth, mirror)
                how = "identity" if mirror is None else f"mirror-{mirror}"
                yield _line(fam, d, "consistency", f"face={face} depth={depth} transform={how}",
                            res.passed, res.witness)


def suite_continuity(families, dmax, depth):
    for fam in families:
        for d in range(1, dmax + 1):
            spec = _family_spec(fam, d)
            res = check_vertex_continuity(spec, depth)
            yield _line(fam, d, "continuity", f"depth={depth}", res.passed, res.witness)
    for fam in families:
        for half in range(1, dmax // 2 + 1):
            inner = _family_spec(fam, half)
            witness = compose.find_symmetry(inner)
            if witness is None:
                continue
            spec = compose.derive_composed_spec(inner, witness)
            res = check_vertex_continuity(spec, depth)
            yield _line(f"composed-{fam}", 2 * half, "continuity", f"depth={depth}", res.passed, res.witness)


def suite_orientation(families, dmax, depth):
    for fam in families:
        for d in range(2, dmax + 1):
            res = check_neutral_orientation(_family_spec(fam, d))
            if res.neutral:
                yield _line(fam, d, "orientation", "max_depth=64", True, f"closure_depth={res.closure_depth}")
            else:
                yield _line(fam, d, "orientation", "max_depth=64", False,
                            f"not neutral; reachable sizes {res.sizes}")


def suite_monotone(families, dmax, depth):
    for spec, segments, dep in ((compose.make_h2(), compose.H2_SEGMENTS, max(depth, 4)),
                                (compose.make_h3(), compose.H3_SEGMENTS, depth)):
        for start, end in segments:
            res = check_monotone(spec, start, end, dep)
            yield _line(spec.name, 2, "monotone", f"from={start} to={end} depth={dep}", res.passed, res.witness)


SUITES = {
    "consistency": suite_consistency,
    "continuity": suite_continuity,
    "orientation": suite_orientation,
    "monotone": suite_monotone,
}


def cmd_verify(args) -> int:
    families = FAMILIES if args.family == "all" else (args.family,)
    names = list(SUITES) if args.suite == "all" else [args.suite]
    total = failed = 0
    print("family\td\tcheck\tparams\tresult\twitness")
    for name in names:
        for line, ok in SUITES[name](families, args.dmax, args.depth):
            print(line)
            total += 1
            failed += not ok
    print(f"# {total} checks, {failed} failed; cell orders of interior points only")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sfcurves", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compare", help="compare two points along a curve")
    _add_curve_args(p)
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sort", help="sort points, one per line, along a curve")
    _add_curve_args(p)
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("rect-sort", help="sort rectangles along a composed curve")
    p.add_argument("--inner", choices=FAMILIES, required=True)
    p.add_argument("--outer", choices=("h2", "h3"))
    p.add_argument("--rect-mode", choices=("xy", "cd"), default="xy")
    p.add_argument("--precision", type=int, default=20)
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_rect_sort)

    p = sub.add_parser("table", help="print the rule table of a curve as TSV")
    _add_curve_args(p, modes=False)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("svg", help="draw a curve as an SVG polyline")
    _add_curve_args(p, modes=False)
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--face")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("verify", help="run property checks and print a report")
    p.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    p.add_argument("--family", choices=FAMILIES + ("all",), default="all")
    p.add_argument("--dmax", type=int, default=3)
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "dim", 1) < 1:
        print("sfcurves: error: --dim must be at least 1", file=sys.stderr)
        return EX_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sfcurves: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except (DigitError, OSError) as exc:
        print(f"sfcurves: error: {exc}", file=sys.stderr)
        return EX_DATAERR
    except SpecError as exc:
        print(f"sfcurves: error: {exc}", file=sys.stderr)
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
