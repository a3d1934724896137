"""Comparison operators for rotation/reflection space-filling curves.

Points are compared along a curve without computing their curve index;
the curve is either a table of subregion rules (:class:`CurveSpec`) or one
of the specialised families below.
"""

from .compose import (Rectangle, compare_composed, derive_composed_spec,
                      find_symmetry, make_h2, make_h3, rect_to_point)
from .curvespec import (CurveSpec, Permutation, SpecError, compare_generic,
                        emit_table, expand_order, format_table, gates,
                        rank_path, subregion_gates)
from .digits import (DigitError, DigitString, DimensionSelector, Point,
                     diaglift, extract, lift, parse_point)
from .graycode import rgc_decode, rgc_encode
from .hilbert import (butzmoore_inconsistency_witness, compare_binary,
                      compare_binary_nonneg, make_standard_hilbert)
from .ternary import (compare_ternary, compare_ternary_nonneg,
                      compare_ternary_signed, make_ternary)
from .verify import (Face, check_monotone, check_neutral_orientation,
                     check_shows, check_vertex_continuity, visible_order)

__version__ = "0.1.0"

__all__ = [
    "CurveSpec", "DigitError", "DigitString", "DimensionSelector", "Face",
    "Permutation", "Point", "Rectangle", "SpecError",
    "butzmoore_inconsistency_witness", "check_monotone",
    "check_neutral_orientation", "check_shows", "check_vertex_continuity",
    "compare_binary", "compare_binary_nonneg", "compare_composed",
    "compare_generic", "compare_ternary", "compare_ternary_nonneg",
    "compare_ternary_signed", "derive_composed_spec", "diaglift", "emit_table",
    "expand_order", "extract", "find_symmetry", "format_table", "gates", "lift",
    "make_h2", "make_h3", "make_standard_hilbert", "make_ternary",
    "parse_point", "rank_path", "rect_to_point", "rgc_decode", "rgc_encode",
    "subregion_gates", "visible_order",
]
