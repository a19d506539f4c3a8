"""Non-split toric BCH codes over small finite fields.

Builds the codes C3, C4, C6, C8 and C9, identifies them as BCH codes, computes
exact minimum distances and Griesmer defects, and checks the elliptic-curve
point counts behind the distance bounds.
"""

from .cyclic import CyclicCode, bch_build, designed_params, dual, from_parity_check, is_lcd
from .delpezzo_codes import CodeReport, build_family, build_report
from .distance import min_distance_exhaustive, weight_distribution
from .elliptic import WeierstrassCurve, count_points, j_invariant, nq1, optimal_search
from .finite_field import FieldElement, FieldSpec, make_field
from .polynomial import Polynomial

__all__ = [
    "CodeReport",
    "CyclicCode",
    "FieldElement",
    "FieldSpec",
    "Polynomial",
    "WeierstrassCurve",
    "bch_build",
    "build_family",
    "build_report",
    "count_points",
    "designed_params",
    "dual",
    "from_parity_check",
    "is_lcd",
    "j_invariant",
    "make_field",
    "min_distance_exhaustive",
    "nq1",
    "optimal_search",
    "weight_distribution",
]
