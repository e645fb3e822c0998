"""Exact circuit walks on rational H-polytopes.

Circuits, maximal circuit steps, circuit walks, distances and diameters with
exact rational arithmetic, plus builders and walk constructions for matching,
perfect matching, travelling salesman, and fractional stable set polytopes.
"""

from .circuits import (
    CIRCUIT,
    DEFAULT_BUDGET,
    NOT_CERTIFIED,
    NOT_CIRCUIT,
    Circuit,
    CircuitSet,
    CircuitTest,
    canonicalize,
    enumerate_circuits,
    is_circuit,
    pairwise_circuit_report,
)
from .errors import (
    BudgetExceeded,
    CircuitLabError,
    ConstructionFailed,
    DepthLimit,
    IncompleteDescription,
    InvariantViolated,
    NoStep,
    NotACircuit,
    Unbounded,
)
from .families import (
    DiffComponent,
    EdgeIndex,
    build_matching_polytope,
    build_perfect_matching_polytope,
    build_tsp_polytope,
    enumerate_matchings,
    enumerate_perfect_matchings,
    enumerate_tours,
    matching_component_walk,
    matching_two_step_recipe,
    symmetric_difference_components,
)
from .fstab import (
    C_WALK,
    BallDecomposition,
    Graph,
    ball_decomposition,
    build_fstab_polytope,
    center_node,
    circuit_patterns,
    enumerate_fstab_vertices,
    fstab_walk,
    graph_diameter,
    is_fstab_circuit,
)
from .polytope import HPolytope, TightSet, add_scaled
from .rational import format_rational, format_vector, parse_rational, parse_vector
from .verify import CheckResult, VerificationReport, run_suite
from .walks import (
    ValidationReport,
    Walk,
    WalkStep,
    circuit_diameter,
    circuit_distance,
    circuit_step,
    one_step,
    two_step_search,
    validate_walk,
)

__version__ = "0.1.0"

__all__ = [
    "BallDecomposition",
    "BudgetExceeded",
    "C_WALK",
    "CIRCUIT",
    "Circuit",
    "CheckResult",
    "CircuitLabError",
    "CircuitSet",
    "CircuitTest",
    "ConstructionFailed",
    "DEFAULT_BUDGET",
    "DepthLimit",
    "DiffComponent",
    "EdgeIndex",
    "Graph",
    "HPolytope",
    "IncompleteDescription",
    "InvariantViolated",
    "NOT_CERTIFIED",
    "NOT_CIRCUIT",
    "NoStep",
    "NotACircuit",
    "TightSet",
    "Unbounded",
    "ValidationReport",
    "VerificationReport",
    "Walk",
    "WalkStep",
    "add_scaled",
    "ball_decomposition",
    "build_fstab_polytope",
    "build_matching_polytope",
    "build_perfect_matching_polytope",
    "build_tsp_polytope",
    "canonicalize",
    "center_node",
    "circuit_diameter",
    "circuit_distance",
    "circuit_patterns",
    "circuit_step",
    "enumerate_circuits",
    "enumerate_fstab_vertices",
    "enumerate_matchings",
    "enumerate_perfect_matchings",
    "enumerate_tours",
    "format_rational",
    "format_vector",
    "fstab_walk",
    "graph_diameter",
    "is_circuit",
    "is_fstab_circuit",
    "matching_component_walk",
    "matching_two_step_recipe",
    "one_step",
    "pairwise_circuit_report",
    "parse_rational",
    "parse_vector",
    "run_suite",
    "symmetric_difference_components",
    "two_step_search",
    "validate_walk",
]
