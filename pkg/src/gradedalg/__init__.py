"""Exact workbench for graded algebras in braided k-linear categories.

The layers build on each other: cyclotomic scalars and exact linear
algebra, group cochains, two concrete host categories, graded algebras
with cocycle twisting, graded modules with tensor products over the
algebra, induced modules with the graded Schur analysis, and the Kleisli
calculus of the -(x)A monad.  Everything computes exactly over Q(zeta_N);
no floats anywhere.
"""

from .scalars import (
    MINUS_ONE,
    ONE,
    ZERO,
    CyclotomicScalar,
    ScalarError,
    format_scalar,
    get_max_order,
    integer,
    parse_scalar,
    rational,
    root_of_unity_order,
    scalar_to_json,
    set_max_order,
    zeta,
)
from .linalg import LinAlgError, Matrix
from .cohomology import (
    CheckReport,
    Cochain1,
    Cochain2,
    Cochain3,
    FinAbGroup,
    UnsupportedValueError,
    check_bicharacter,
    check_cocycle2,
    check_cocycle3,
    cohomologous,
    d1,
    d2,
    d3,
    subgroup_presentation,
    validate_abelian3,
)
from .hostcat import (
    GradedVecContext,
    Grading,
    HostError,
    HostMorphism,
    RepContext,
    braiding,
    braiding_inverse,
    compose,
    direct_sum,
    grade_components,
    hom_basis,
    identity_mor,
    image_and_cokernel,
    is_even,
    sub_object,
    tensor_mor,
    tensor_obj,
)
from .galg import (
    FrobeniusData,
    GradedAlgebra,
    algebra_iso_even,
    build_twisted_group_algebra,
    check_algebra,
    check_frobenius,
    check_graded_commutative,
    check_separability,
    opposite_algebra,
    solve_pointed_obstruction,
    twist_algebra,
    twist_frobenius,
)
from .gmod import (
    Bimodule,
    LeftModule,
    NotGradedCommutativeError,
    RightModule,
    TensorOverA,
    check_module,
    graded_tensor,
    left_from_right_braided,
    module_map_report,
    regular_bimodule,
    regular_left,
    regular_right,
    tensor_morphisms_over_A,
    tensor_over_A,
    twist_module,
)
from .induced import (
    InducedModule,
    InternalConsistencyError,
    StabilizerData,
    graded_schur_report,
    hom_A_induced,
    induce,
    induced_simplicity_probe,
    sigma_cocycle,
    stabilizer,
)
from .kleisli import (
    KleisliMorphism,
    MonadA,
    check_frobenius_monad,
    check_monoidal_monad,
    check_twisted_interchange,
    induced_tensor_comparison,
    induced_to_kleisli,
    kleisli_compose,
    kleisli_identity,
    kleisli_tensor,
    kleisli_to_induced,
    lax_monoidal_map,
    oplax_monoidal_map,
)
from .io import SchemaError, Workspace, canonical_json

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # scalars
    "CyclotomicScalar", "ScalarError", "ZERO", "ONE", "MINUS_ONE",
    "zeta", "integer", "rational", "root_of_unity_order",
    "parse_scalar", "scalar_to_json", "format_scalar",
    "get_max_order", "set_max_order",
    # linear algebra
    "Matrix", "LinAlgError",
    # cohomology
    "FinAbGroup", "Cochain1", "Cochain2", "Cochain3", "CheckReport",
    "d1", "d2", "d3", "check_cocycle2", "check_bicharacter",
    "check_cocycle3", "cohomologous", "validate_abelian3",
    "subgroup_presentation", "UnsupportedValueError",
    # host categories
    "HostError", "GradedVecContext", "RepContext", "HostMorphism",
    "Grading", "tensor_obj", "tensor_mor", "identity_mor", "compose",
    "braiding", "braiding_inverse", "hom_basis", "grade_components",
    "is_even", "image_and_cokernel", "sub_object", "direct_sum",
    # graded algebras
    "GradedAlgebra", "FrobeniusData", "check_algebra", "twist_algebra",
    "algebra_iso_even", "check_frobenius", "check_separability",
    "twist_frobenius", "check_graded_commutative", "opposite_algebra",
    "solve_pointed_obstruction", "build_twisted_group_algebra",
    # modules
    "RightModule", "LeftModule", "Bimodule", "NotGradedCommutativeError",
    "check_module", "module_map_report", "twist_module",
    "left_from_right_braided", "regular_right", "regular_left",
    "regular_bimodule", "TensorOverA", "tensor_over_A", "graded_tensor",
    "tensor_morphisms_over_A",
    # induced modules
    "InducedModule", "StabilizerData", "InternalConsistencyError",
    "induce", "hom_A_induced", "induced_simplicity_probe", "stabilizer",
    "sigma_cocycle", "graded_schur_report",
    # Kleisli calculus
    "MonadA", "KleisliMorphism", "kleisli_identity", "kleisli_compose",
    "kleisli_tensor", "lax_monoidal_map", "oplax_monoidal_map",
    "check_twisted_interchange", "check_monoidal_monad",
    "check_frobenius_monad", "kleisli_to_induced", "induced_to_kleisli",
    "induced_tensor_comparison",
    # workspaces
    "SchemaError", "Workspace", "canonical_json",
]
