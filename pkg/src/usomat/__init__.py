"""Matousek-type unique sink orientations, end to end.

Construct orientations from dimension influence graphs, decide which of
them are realizable, synthesize realizing cyclic extensions and exact
rational P-LCP instances, and measure Random Facet sink-finding cost.
"""

from .cube import (
    MAX_DIMENSION,
    Face,
    Isomorphism,
    Orientation,
    apply_isomorphism,
    check_orientation,
    dims_to_mask,
    global_sink,
    is_uso,
    mask_to_dims,
    unique_sink_per_face,
)
from .matousek import (
    CyclicInfluence,
    InfluenceGraph,
    NotMatousekType,
    build_matousek,
    canonicalize,
    extract_influence_graph,
    flip_facet,
)
from .realizability import (
    Branching,
    ForbiddenWitness,
    find_forbidden,
    holt_klee_3face,
    is_branching_closure,
    synthesize_extension,
)
from .matroid import (
    Q,
    CyclicExtension,
    SignedSet,
    containment_graph,
    extension_to_uso,
    fundamental_circuit,
    is_p_matroid,
    push_q_left,
    validate_conditions,
    verify_circuit_axioms,
)
from .plcp import (
    CandidateSolution,
    DegenerateQ,
    PLCPInstance,
    RationalMatrix,
    is_p_matrix,
    plcp_to_uso,
    realization_matrix,
    solve_candidate,
    translate_to_plcp,
)
from .random_facet import (
    FAMILIES,
    RfResult,
    TrialStats,
    random_facet,
    run_trials,
    stats_to_csv,
)

__version__ = "0.1.0"

__all__ = [
    "MAX_DIMENSION",
    "Face",
    "Isomorphism",
    "Orientation",
    "apply_isomorphism",
    "check_orientation",
    "dims_to_mask",
    "global_sink",
    "is_uso",
    "mask_to_dims",
    "unique_sink_per_face",
    "CyclicInfluence",
    "InfluenceGraph",
    "NotMatousekType",
    "build_matousek",
    "canonicalize",
    "extract_influence_graph",
    "flip_facet",
    "Branching",
    "ForbiddenWitness",
    "find_forbidden",
    "holt_klee_3face",
    "is_branching_closure",
    "synthesize_extension",
    "Q",
    "CyclicExtension",
    "SignedSet",
    "containment_graph",
    "extension_to_uso",
    "fundamental_circuit",
    "is_p_matroid",
    "push_q_left",
    "validate_conditions",
    "verify_circuit_axioms",
    "CandidateSolution",
    "DegenerateQ",
    "PLCPInstance",
    "RationalMatrix",
    "is_p_matrix",
    "plcp_to_uso",
    "realization_matrix",
    "solve_candidate",
    "translate_to_plcp",
    "FAMILIES",
    "RfResult",
    "TrialStats",
    "random_facet",
    "run_trials",
    "stats_to_csv",
    "__version__",
]
