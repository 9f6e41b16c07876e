"""Exact verification toolkit for Lie-Yamaguti algebras and their operator structures."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .algebra import (
    LieYamagutiAlgebra,
    deformed_algebra,
    deformed_brackets,
    is_homomorphism,
    is_nijenhuis,
    nijenhuis_deformation_tensors,
)
from .deform import (
    DeformationData,
    NijenhuisStructure,
    are_equivalent_deformations,
    deformation_cocycle,
    hat_rep,
    is_linear_deformation,
    is_nijenhuis_structure,
    semidirect_nijenhuis,
    trivial_deformation_from,
)
from .linalg import Matrix, Tensor
from .paircomplex import (
    PairCochain,
    lift,
    pair_cohomology_dim,
    pair_delta_direct,
    pair_delta_lifted,
    project,
)
from .quadratic import (
    QuadraticForm,
    RMatrix,
    invariance_transport,
    is_dual_nijenhuis,
    is_invariant_form,
    is_r_matrix,
    is_rb_dual_nijenhuis,
    is_rb_nijenhuis,
    is_rmatrix_nijenhuis,
    is_skew_endomorphism,
    rbn_to_rmn,
    rmn_to_rbn,
)
from .reps import (
    LieYRepPair,
    Representation,
    adjoint_rep,
    check_derived_identities,
    check_representation,
    coadjoint_rep,
    derived_D,
    dual_rep,
    is_pair_homomorphism,
    semidirect,
)
from .rotabaxter import (
    RBNTriple,
    RelativeRBOperator,
    is_compatible_pair,
    is_rbn,
    is_relative_rb,
    nijenhuis_from_pair,
    rbn_consequences,
    strong_condition,
    subadjacent,
)
from .scalars import Poly, T, poly_is_zero
from .yamaguti import YamagutiCochain, cohomology_dim, delta, delta_matrix

__version__ = "0.1.0"

__all__ = [
    "DeformationData",
    "KERNEL_BACKEND",
    "LieYRepPair",
    "LieYamagutiAlgebra",
    "Matrix",
    "NijenhuisStructure",
    "PairCochain",
    "Poly",
    "QuadraticForm",
    "RBNTriple",
    "RMatrix",
    "RelativeRBOperator",
    "Representation",
    "T",
    "Tensor",
    "YamagutiCochain",
    "adjoint_rep",
    "are_equivalent_deformations",
    "check_derived_identities",
    "check_representation",
    "coadjoint_rep",
    "cohomology_dim",
    "deformation_cocycle",
    "deformed_algebra",
    "deformed_brackets",
    "delta",
    "delta_matrix",
    "derived_D",
    "dual_rep",
    "hat_rep",
    "invariance_transport",
    "is_compatible_pair",
    "is_dual_nijenhuis",
    "is_homomorphism",
    "is_invariant_form",
    "is_linear_deformation",
    "is_nijenhuis",
    "is_nijenhuis_structure",
    "is_pair_homomorphism",
    "is_r_matrix",
    "is_rb_dual_nijenhuis",
    "is_rb_nijenhuis",
    "is_rbn",
    "is_relative_rb",
    "is_rmatrix_nijenhuis",
    "is_skew_endomorphism",
    "lift",
    "nijenhuis_deformation_tensors",
    "nijenhuis_from_pair",
    "pair_cohomology_dim",
    "pair_delta_direct",
    "pair_delta_lifted",
    "poly_is_zero",
    "project",
    "rbn_consequences",
    "rbn_to_rmn",
    "rmn_to_rbn",
    "semidirect",
    "semidirect_nijenhuis",
    "strong_condition",
    "subadjacent",
    "trivial_deformation_from",
]
