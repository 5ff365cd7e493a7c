"""Quasi-binary quasi-orthogonal matrices over GF(2^m).

Orthogonal binary matrices are built from cyclic Latin rectangles using only
XORs of column support sets; substituting two field values for 0 and 1 gives
matrices whose inverse is a transpose plus a second substitution.
"""

from .errors import (
    BadPair,
    DegreeMismatch,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
    NotLatin,
    OddDimension,
    ParseError,
    QuasiOrthoError,
    ReduciblePolynomial,
    Singular,
    SingularSystem,
    TripletNotFound,
)
from .gf2m import FieldElement, FieldSpec, make_field
from .latin import (
    CyclicLatinRectangle,
    Permutation,
    SupportSetMatrix,
    build_cyclic,
    dense_to_supports,
    incidence,
    random_permutation,
    supports_to_dense,
)
from .oracle import BinaryMatrix, FieldMatrix, bin_inverse, bin_matmul, bin_transpose, field_matmul, is_identity
from .orthogen import (
    GeneratorConfig,
    ParamTriplet,
    find_params,
    is_orthogonal_triplet,
    random_orthogonal_binary_matrix,
    search_table,
    support_product,
    weight_stats,
)
from .quasi import (
    InversePair,
    QuasiBinaryMatrix,
    inverse_pair,
    quasi_inverse,
    solve_pair_system,
    substitute,
    verify_quasi_inverse,
)

__version__ = "0.1.0"
