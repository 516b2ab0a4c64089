"""Exact-arithmetic toolkit for graded Lie algebras of polynomial vector
fields, their tensor modules, spanning certificates, Hilbert series, and
Chevalley-Eilenberg homology.

Everything is computed over Q with fractions.Fraction; no floating point is
used anywhere, so every certificate, rank, and dimension in this package is
exact.
"""

from .exact import Echelon, MPoly, SparseMat, format_rat, parse_rat, rat
from .liealg import (
    AlgebraDescriptor,
    LieElement,
    VFBasis,
    basis_of_weight,
    basis_up_to_weight,
    bracket,
    bracket_basis,
    coordinate_e,
    dilation_embedding,
    e_basis,
    jacobi_defect,
)
from .tensormod import (
    ModuleDescriptor,
    ModuleElement,
    WeightVector,
    act_e,
    act_e_coordinate,
    act_lie,
    act_word,
    decompose_coinduced,
    graded_dimension,
    module_axiom_check,
    monomial,
    shift_embed,
    shift_submodule,
    weight_support,
)
from .spanning import (
    GeneratorSet,
    ResourceLimitError,
    SearchExhaustedError,
    dilated_generators,
    find_good_shift,
    graded_basis_certificate,
    newton_matrix,
    shift_determinant,
    shift_determinant_value,
    spanning_certificate,
    spanning_generators,
    verify_graded_basis,
    verify_spanning,
    verify_spanning_dilated,
)
from .pbw_hilbert import (
    PolyModulePresentation,
    RationalSeries,
    associated_graded_presentation,
    groebner_self_test,
    hilbert_series,
    module_groebner,
    normal_order_word,
    partial_sum_polynomial,
)
from .homology import (
    ChainBasisElement,
    TensorCoefficients,
    TrivialCoefficients,
    boundary_matrix,
    chain_basis,
    homology_dim,
    homology_table,
    table_to_csv,
    table_to_json,
)
from .specht import (
    TSpace,
    closure_basis,
    homogeneous_split,
    infinitesimal_act,
    substitute,
    tspace_series,
    variables_tuple,
)

__version__ = "0.1.0"
