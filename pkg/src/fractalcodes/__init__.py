"""Fractal codes: sums of Kronecker products of two binary code families."""

from .analysis import (
    AnalysisReport,
    analyze,
    construct,
    dimension_formula,
    embedded_params,
    lower_bound,
    psi_tables,
    upper_bound,
    upper_bound_witness,
    verify,
)
from .codes import (
    DEFAULT_BUDGET,
    INFINITE,
    LinearCode,
    code_from_rows,
    code_intersection,
    code_sum,
    even_weight,
    from_text,
    puncture,
    repetition,
    tensor_product,
    universe,
    zero_code,
)
from .errors import (
    BudgetExceededError,
    DimensionMismatchError,
    HypothesisViolatedError,
    NotEmbeddedError,
    NotInUnionError,
    ParseError,
)
from .families import (
    CodeFamily,
    FamilyBasis,
    MultiIndex,
    minimal_elements,
    new_family,
    transversals,
)
from .gf2 import (
    BitMatrix,
    BitVector,
    kron,
    kron_matrix,
    member,
    rref,
    subspace_intersection,
    subspace_sum,
)

__version__ = "0.1.0"
