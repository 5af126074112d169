"""Exact verification toolkit for matching-count reductions on drawn graphs.

Everything numeric is either exact (integers, rationals, sparse integer
polynomials) or a complex ball that provably contains the exact value, so
every identity check and every counting reduction in here is a certificate,
not a floating-point estimate.
"""

from .balls import DEFAULT_PREC, BallComplex
from .constants import (
    MAX_PRECISION,
    MIN_PRECISION,
    PUBLISHED_DECIMALS,
    VARIANTS,
    CrossingConstant,
    SubgadgetWeights,
    crossing_constant,
    gadget_constants,
    legacy_delta1_c_display,
    verify_constants,
    weight_map,
)
from .errors import (
    BadBoundary,
    BallContainsZero,
    DegenerateDrawing,
    DivisorContainsZero,
    DuplicateNode,
    GraphFormatError,
    InputError,
    InsufficientPrecision,
    LayoutFailure,
    MatchpolyError,
    NonDivisibleRing,
    NotAnInteger,
    NotBipartite,
    OddCycle,
    OrientationConflict,
    PreconditionError,
    ResourceBudgetExceeded,
    ResourceError,
    TooLargeForOracle,
    UnassignedSymbol,
    UnknownTag,
    VerificationError,
    VerificationFailed,
)
from .gadgets import (
    ATTACHMENTS,
    TERMINAL_ORDER,
    CrossingGadget,
    SubgadgetTemplate,
    allowed_crossing_patterns,
    build_crossing_gadget,
    build_subgadget,
    compose_crossing_profile,
    direct_crossing_profile,
    subgadget_profile,
    symbolic_gadget_polynomial,
    verify_crossing_gadget,
    verify_subgadget,
)
from .graphs import (
    Bipartition,
    Crossing,
    CrossingSet,
    Drawing,
    Graph,
    Vertex,
    check_bipartite,
    circular_layout,
    detect_crossings,
    dump_graph,
    graph_from_json,
    graph_to_json,
    load_graph,
    pendant_extension,
    validate_drawing,
)
from .matching import (
    DEFAULT_NODE_BUDGET,
    ORACLE_BOUND,
    BoundaryProfile,
    SizeDistribution,
    boundary_profile,
    count_matchings,
    count_maximum_matchings,
    enumerate_matchings,
    matching_polynomial,
    matching_polynomial_by_enumeration,
    max_matching_size,
    size_distribution,
)
from .polyring import MultiPoly, vandermonde_solve
from .reductions import (
    CrossingPlacement,
    InterpolationRun,
    PrecisionPolicy,
    ReductionCertificate,
    WeightedPlanarInstance,
    build_gi,
    count_matchings_via_pendant,
    count_via_reduction,
    eliminate_all,
    eliminate_weight,
    pendant_map,
    phi,
    phi_prime,
    replace_crossings,
)
from .report import IdentityReport, ReportRow

__version__ = "0.1.0"
