"""Combinatorial engines for disk complexes, Heegaard diagrams, and
generalized Heegaard splittings."""

from .disk_complex import (
    ClassificationVerdict,
    DiskComplexGraph,
    DistanceResult,
    LambdaGraph,
    build_gamma,
    build_lambda,
    classify,
    component_distance,
    components,
    edge_distance,
    emit_graph,
    find_destab_edge,
    isolated_vertices,
    quotient_by_symmetry,
    vertex_distance,
)
from .ghs import (
    GHS,
    CompressionDescriptor,
    Destabilization,
    InvalidGHS,
    InvalidMove,
    WeakReduction,
    apply_move,
    compare_collections,
    compare_ghs,
    complexity,
    compress,
    destabilize,
    enumerate_moves,
    ghs_key,
    stabilize,
    validate_ghs,
    weak_reduce,
)
from .handlebody import (
    CutSystem,
    HeegaardDiagram,
    InvalidCutSystem,
    SignedWord,
    boundary_word,
    bounds_disk,
    enumerate_disk_boundaries,
    lens_space,
    s2_x_s1,
    s3_genus1,
    standard_diagram,
    validate_cut_system,
)
from .sog import (
    SOG,
    FlattenBudgetExhausted,
    InventoryOracle,
    InvalidSOG,
    SOGStep,
    SymbolicBudget,
    SymbolicOracle,
    compare_sogs,
    flatten,
    max_key,
    maximal_positions,
    minimal_positions,
    splitting_distance,
    verify_single_maximal,
)
from .surface import (
    BudgetExhausted,
    CurveClass,
    InessentialCurve,
    InvalidCoordinates,
    ModelSurface,
    MulticurveReport,
    Slope,
    SurfaceMismatch,
    canonical_triangulation,
    enumerate_essential_curves,
    geometric_intersection,
    is_essential,
    normalize,
    same_class,
)

__all__ = [
    "BudgetExhausted",
    "ClassificationVerdict",
    "CompressionDescriptor",
    "CurveClass",
    "CutSystem",
    "Destabilization",
    "DiskComplexGraph",
    "DistanceResult",
    "FlattenBudgetExhausted",
    "GHS",
    "HeegaardDiagram",
    "InessentialCurve",
    "InvalidCoordinates",
    "InvalidCutSystem",
    "InvalidGHS",
    "InvalidMove",
    "InvalidSOG",
    "InventoryOracle",
    "LambdaGraph",
    "ModelSurface",
    "MulticurveReport",
    "SOG",
    "SOGStep",
    "SignedWord",
    "Slope",
    "SurfaceMismatch",
    "SymbolicBudget",
    "SymbolicOracle",
    "WeakReduction",
    "apply_move",
    "boundary_word",
    "bounds_disk",
    "build_gamma",
    "build_lambda",
    "canonical_triangulation",
    "classify",
    "compare_collections",
    "compare_ghs",
    "compare_sogs",
    "complexity",
    "component_distance",
    "components",
    "compress",
    "destabilize",
    "edge_distance",
    "emit_graph",
    "enumerate_disk_boundaries",
    "enumerate_essential_curves",
    "enumerate_moves",
    "find_destab_edge",
    "flatten",
    "geometric_intersection",
    "ghs_key",
    "is_essential",
    "isolated_vertices",
    "lens_space",
    "max_key",
    "maximal_positions",
    "minimal_positions",
    "normalize",
    "quotient_by_symmetry",
    "s2_x_s1",
    "s3_genus1",
    "same_class",
    "splitting_distance",
    "stabilize",
    "standard_diagram",
    "validate_cut_system",
    "validate_ghs",
    "verify_single_maximal",
    "vertex_distance",
    "weak_reduce",
]
