"""Ionescu-Weitzenboeck defect toolkit (Python bindings)."""

from ._core import (
    IdentityReport,
    InputError,
    area_heron,
    classify,
    defect_explicit,
    defect_intrinsic,
    figure_csv,
    lhs_sum,
    rotate_pi3,
    shape_point,
    sweep,
    tangent_line_slope,
    tangent_point,
    curve_identity,
    triangle_defect,
    triangle_to_vectors,
    verify_exact,
    verify_identity,
    wedge,
)

__all__ = [
    "IdentityReport",
    "InputError",
    "area_heron",
    "classify",
    "defect_explicit",
    "defect_intrinsic",
    "figure_csv",
    "lhs_sum",
    "rotate_pi3",
    "shape_point",
    "sweep",
    "tangent_line_slope",
    "tangent_point",
    "curve_identity",
    "triangle_defect",
    "triangle_to_vectors",
    "verify_exact",
    "verify_identity",
    "wedge",
]
