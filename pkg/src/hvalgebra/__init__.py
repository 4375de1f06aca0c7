"""Exact-arithmetic toolkit for a twisted Heisenberg-Virasoro algebra.

The package provides the bracket and its centerless quotient over the
Gaussian rationals, linear/bilinear map checking (derivations,
biderivations, commuting maps, commutative post-Lie products), exact
windowed equation solving with canonical nullspace bases, and a graded
left-symmetric product family.  Everything is exact; there are no
floating-point code paths.
"""

from .core import (
    C1,
    C2,
    C3,
    CENTRAL_KEYS,
    LIE_HV,
    LIE_W00,
    AlgebraKind,
    BasisKey,
    Element,
    I,
    L,
    Product,
    basis_window,
    bracket,
    bracket_keys,
    center_basis,
    project_w00,
)
from .bimaps import (
    BilinearMap,
    Classified,
    Inner,
    Omega,
    ROmega,
    SumBilinear,
    TabularBilinear,
    central_annihilation,
    classified_span,
    interior_projection,
    is_biderivation,
    rehydrate,
    solve_biderivations,
    symmetry_class,
)
from .commuting import generator_span, is_commuting, make_commuting, solve_commuting
from .errors import (
    DomainNotCovered,
    HvError,
    IncompatibleSpaces,
    IndexOverflow,
    InfeasibleWindow,
    NotCentral,
    ParseError,
    ZeroDenominator,
)
from .leftsym import (
    LeftSymParams,
    LeftSymProduct,
    check_derivation_inheritance,
    is_left_symmetric,
    params_valid,
    quotient_biderivation_space,
    subadjacent_residual,
)
from .linalg import SolutionSpace, SparseMatrix, VarRegistry, nullspace, rank, rref, span_equal
from .linmaps import (
    D1,
    D2,
    D3,
    CentralMap,
    CheckReport,
    Counterexample,
    Decomposition,
    InnerAd,
    LinearMap,
    ScalarId,
    ScaledMap,
    SumMap,
    TabularMap,
    Window,
    adjoint,
    decompose_derivation,
    is_derivation,
    tabulate,
)
from .parsing import (
    evaluate_expression,
    parse_bilinear_map_file,
    parse_element,
    parse_expression,
    parse_linear_map_file,
    parse_omega,
    parse_scalar,
)
from .postlie import is_commutative_postlie, postlie_residual
from .scalars import Scalar

__version__ = "0.1.0"

__all__ = [
    "AlgebraKind",
    "BasisKey",
    "BilinearMap",
    "C1",
    "C2",
    "C3",
    "CENTRAL_KEYS",
    "CentralMap",
    "CheckReport",
    "Classified",
    "Counterexample",
    "D1",
    "D2",
    "D3",
    "Decomposition",
    "DomainNotCovered",
    "Element",
    "HvError",
    "I",
    "IncompatibleSpaces",
    "IndexOverflow",
    "InfeasibleWindow",
    "Inner",
    "InnerAd",
    "L",
    "LIE_HV",
    "LIE_W00",
    "LeftSymParams",
    "LeftSymProduct",
    "LinearMap",
    "NotCentral",
    "Omega",
    "ParseError",
    "Product",
    "ROmega",
    "Scalar",
    "ScalarId",
    "ScaledMap",
    "SolutionSpace",
    "SparseMatrix",
    "SumBilinear",
    "SumMap",
    "TabularBilinear",
    "TabularMap",
    "VarRegistry",
    "Window",
    "ZeroDenominator",
    "adjoint",
    "basis_window",
    "bracket",
    "bracket_keys",
    "center_basis",
    "central_annihilation",
    "check_derivation_inheritance",
    "classified_span",
    "decompose_derivation",
    "evaluate_expression",
    "generator_span",
    "interior_projection",
    "is_biderivation",
    "is_commutative_postlie",
    "is_commuting",
    "is_derivation",
    "is_left_symmetric",
    "make_commuting",
    "nullspace",
    "params_valid",
    "parse_bilinear_map_file",
    "parse_element",
    "parse_expression",
    "parse_linear_map_file",
    "parse_omega",
    "parse_scalar",
    "postlie_residual",
    "project_w00",
    "quotient_biderivation_space",
    "rank",
    "rehydrate",
    "rref",
    "solve_biderivations",
    "solve_commuting",
    "span_equal",
    "subadjacent_residual",
    "symmetry_class",
    "tabulate",
]
