"""Function fields of class number one: bounds, the genus-4 census over F_2,
and the certificate for the one candidate curve with h = 1."""

from .bounds import genus_bounds_for_h, rr_weil_feasible, weil_lower_bound_exceeds
from .census import certify_exception, emit_report, run_census
from .forms import Form, GLMatrix, LinearMask, builtin_candidates, parse_form, square_linear, substitute
from .gfield import GFElem, FieldCtx, embed, make_field
from .points import PointCounts, closed_point_counts, count_points, count_sequence
from .quadforms import are_equivalent, reduced_mask_list
from .zeta import ZetaNumerator, class_number, numerator_from_counts, numerator_full, predict_counts, weil_check

__version__ = "0.1.0"

__all__ = [
    "FieldCtx", "Form", "GFElem", "GLMatrix", "LinearMask", "PointCounts", "ZetaNumerator",
    "are_equivalent", "builtin_candidates", "certify_exception", "class_number",
    "closed_point_counts", "count_points", "count_sequence", "embed", "emit_report",
    "genus_bounds_for_h", "make_field", "numerator_from_counts", "numerator_full",
    "parse_form", "predict_counts", "reduced_mask_list", "rr_weil_feasible", "run_census",
    "square_linear", "substitute", "weil_check", "weil_lower_bound_exceeds",
]
