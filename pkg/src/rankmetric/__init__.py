"""Rank-metric codes over finite field towers: Gabidulin codes, Delsarte matrix codes, LCD checks."""

from .basis import (
    ExtensionBasis,
    NotExists,
    dual_basis,
    expand_vector,
    find_almost_self_dual_basis,
    find_self_dual_basis,
    gram_matrix,
    is_almost_self_dual,
    is_self_dual,
)
from .delsarte import (
    MatrixCode,
    Subspace,
    ambient_restriction,
    delsarte_bound,
    is_lcd,
    is_mrd_delsarte,
    is_optimal_anticode,
    lcd_anticode_criterion,
    rank_range,
    trace_inner_product,
)
from .errors import RankMetricError
from .field import FieldElement, FieldTower, FiniteField, frobenius, make_tower, trace_to_base
from .gabidulin import (
    VectorCode,
    cartesian_power,
    dual_code,
    expand_code,
    gabidulin_code,
    hull,
    is_lcd_massey,
    is_mrd,
    min_rank_distance,
    moore_matrix,
    vector_rank,
)

__version__ = "0.1.0"

__all__ = [
    "ExtensionBasis",
    "FieldElement",
    "FieldTower",
    "FiniteField",
    "MatrixCode",
    "NotExists",
    "RankMetricError",
    "Subspace",
    "VectorCode",
    "ambient_restriction",
    "cartesian_power",
    "delsarte_bound",
    "dual_basis",
    "dual_code",
    "expand_code",
    "expand_vector",
    "find_almost_self_dual_basis",
    "find_self_dual_basis",
    "frobenius",
    "gabidulin_code",
    "gram_matrix",
    "hull",
    "is_almost_self_dual",
    "is_lcd",
    "is_lcd_massey",
    "is_mrd",
    "is_mrd_delsarte",
    "is_optimal_anticode",
    "is_self_dual",
    "lcd_anticode_criterion",
    "make_tower",
    "min_rank_distance",
    "moore_matrix",
    "rank_range",
    "trace_inner_product",
    "trace_to_base",
    "vector_rank",
]
