"""Digraph algorithms for k-quasi-transitive digraphs: recognition,
r-kings, (k,l)-kernels, and a brute-force checking suite for the structural
theorems the library is built on."""

from .checks import (
    CHECKERS,
    KING_CHECKS,
    LEMMA_CHECKS,
    CheckResult,
    Violation,
    kings_corpus,
    lemma_corpus,
    revalidate,
    run_checker,
    run_suite,
    summarize,
)
from .digraph import (
    INF,
    Condensation,
    Digraph,
    DistanceMatrix,
    build,
    distance_matrix,
    distances_from,
    induced,
    reverse,
    strong_components,
)
from .edgelist import content_digest, emit, parse, read_digraph, write_digraph
from .errors import (
    ArityMismatch,
    DuplicateArc,
    EdgeListParseError,
    InstanceTooLarge,
    LoopArc,
    NotQuasiTransitiveInput,
    NotSemicomplete,
    QkError,
    VertexOutOfRange,
)
from .kernels import (
    REFUTED,
    VERIFIED,
    Counterexample,
    HuntLedger,
    KernelCertificate,
    construct_kplus2_kernel,
    exhaustive_kernel_search,
    hunt_conjecture,
    recheck_counterexample,
    verify_kernel,
)
from .kings import (
    AuditRow,
    KingReport,
    all_eccentricities,
    all_r_kings,
    census,
    degree_threshold_vertices,
    find_kplus1_king_fast,
    has_unique_initial_component,
    out_eccentricity,
    semicomplete_two_king,
)
from .qt import (
    DEFAULT_ENUM_CAP,
    FORWARD,
    RANDOM,
    GenConfig,
    QtViolation,
    certify_qt,
    compose,
    enum_cap,
    is_k_quasi_transitive,
    mix_seed,
    qt_closure,
    random_qt,
)

__version__ = "0.1.0"

__all__ = [
    "INF",
    "Condensation",
    "Digraph",
    "DistanceMatrix",
    "build",
    "distance_matrix",
    "distances_from",
    "induced",
    "reverse",
    "strong_components",
    "QkError",
    "LoopArc",
    "DuplicateArc",
    "VertexOutOfRange",
    "InstanceTooLarge",
    "NotQuasiTransitiveInput",
    "NotSemicomplete",
    "ArityMismatch",
    "EdgeListParseError",
    "emit",
    "parse",
    "content_digest",
    "read_digraph",
    "write_digraph",
    "QtViolation",
    "GenConfig",
    "RANDOM",
    "FORWARD",
    "DEFAULT_ENUM_CAP",
    "enum_cap",
    "mix_seed",
    "is_k_quasi_transitive",
    "certify_qt",
    "qt_closure",
    "random_qt",
    "compose",
    "out_eccentricity",
    "all_eccentricities",
    "all_r_kings",
    "has_unique_initial_component",
    "degree_threshold_vertices",
    "find_kplus1_king_fast",
    "semicomplete_two_king",
    "AuditRow",
    "KingReport",
    "census",
    "VERIFIED",
    "REFUTED",
    "KernelCertificate",
    "verify_kernel",
    "construct_kplus2_kernel",
    "exhaustive_kernel_search",
    "Counterexample",
    "HuntLedger",
    "hunt_conjecture",
    "recheck_counterexample",
    "Violation",
    "CheckResult",
    "CHECKERS",
    "LEMMA_CHECKS",
    "KING_CHECKS",
    "kings_corpus",
    "lemma_corpus",
    "run_checker",
    "run_suite",
    "summarize",
    "revalidate",
    "__version__",
]
