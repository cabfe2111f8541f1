"""Star and semi-star rewrites, packing searches, and verifiers for
fullerene graphs represented by rotation systems."""

from .budget import DEFAULT_BUDGET, SearchBudget
from .codec import (
    CodecError,
    IdentifierOutOfRangeError,
    TooLargeError,
    TruncatedStreamError,
    ValidationFailedError,
    decode_planar_code,
    encode_planar_code,
    encode_planar_code_stream,
)
from .cycles import (
    CycleFactor,
    NotDivisibleError,
    PathPacking,
    find_cycle_factor_5_6,
    find_hamiltonian_cycle,
    split_cycle_into_paths,
)
from .errors import (
    ArithmeticInfeasibleError,
    BudgetExceededError,
    ExhaustedError,
    StarpackError,
)
from .fixtures import fixture_dodecahedron
from .graphs import (
    AsymmetricAdjacencyError,
    BadIdentifierError,
    DisconnectedError,
    EmbeddedCubicGraph,
    Face,
    FaceCensus,
    GenusNonZeroError,
    GraphError,
    NonCubicError,
    VerificationReport,
    build_graph,
    face_census,
    trace_faces,
    verify_fullerene,
    vertex_connectivity_at_least,
)
from .layout import DidNotConvergeError, Layout, SingularSystemError, layout_tutte
from .export import Annotations, MissingLayoutError, export_dot, export_svg
from .matching import PseudoMatching, find_perfect_matching, find_pseudo_matching
from .packing import (
    InvalidInputError,
    PackingClassification,
    SearchOutcome,
    Spider,
    SpiderPacking,
    Star,
    StarPacking,
    StarPackingSearchResult,
    classify_packing,
    find_balanced_p0_packing,
    find_star_packings,
)
from .transforms import (
    ChordAssignment,
    ChordInfeasibleError,
    NotBalancedError,
    NotDirectError,
    NotP0Error,
    OddStarCountError,
    PostconditionFailedError,
    ProvenanceMismatchError,
    SemiStarProvenance,
    StarTransformProvenance,
    chamfer,
    extract_cycle_factor_from_provenance,
    extract_subdivided_star_packing,
    provenance_from_text,
    provenance_to_text,
    semi_star_transform,
    solve_chord_assignment,
    star_transform,
)
from .verifiers import CertificateError, PackingNotValidError

__version__ = "0.1.0"
