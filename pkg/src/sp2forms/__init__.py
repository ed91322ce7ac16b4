"""Jordan types and symplectic class data of unipotent elements in characteristic two."""

__version__ = "0.1.0"

from .hesselink import (
    EpsilonTaggedType,
    SymplecticConstraintError,
    SymplecticType,
    alpha_of,
    induce_bilinear,
    merge_tagged,
    orthogonal_sum,
    restrict_bilinear,
    tensor_bilinear,
    validate_symplectic,
    vtype,
    wtype,
)
from .jordan import (
    ConsecutiveOnesExpansion,
    JordanType,
    ParseError,
    consecutive_ones,
    induce_power,
    restrict_power,
    tensor,
    tensor_blocks,
    tensor_square_closed,
    unique_odd_block,
    wedge_block,
    wedge_square,
)
from .reps import DualTensorClasses, WedgeSquareClasses, dual_tensor_classes, wedge_square_classes

__all__ = [
    "ConsecutiveOnesExpansion",
    "DualTensorClasses",
    "EpsilonTaggedType",
    "JordanType",
    "ParseError",
    "SymplecticConstraintError",
    "SymplecticType",
    "WedgeSquareClasses",
    "alpha_of",
    "consecutive_ones",
    "dual_tensor_classes",
    "induce_bilinear",
    "induce_power",
    "merge_tagged",
    "orthogonal_sum",
    "restrict_bilinear",
    "restrict_power",
    "tensor",
    "tensor_bilinear",
    "tensor_blocks",
    "tensor_square_closed",
    "unique_odd_block",
    "validate_symplectic",
    "vtype",
    "wedge_block",
    "wedge_square",
    "wedge_square_classes",
    "wtype",
]
