"""Exact monodromy and Gauss-Manin connection matrices for hyperplane
arrangement complexes: nbc bases, the universal cochain complex from a group
presentation via Fox calculus, the polynomial-coefficient analogue from the
arrangement combinatorics, certified action matrices of moduli loops, their
formal connections, and certified eigenvalue factorizations.
"""

__version__ = "0.1.0"

from .arrangement import (
    Arrangement,
    DependencyData,
    Hyperplane,
    NbcBasis,
    compute_dependencies,
    load_arrangement,
    nbc_basis,
    parse_arrangement,
)
from .connection import (
    EigenFactor,
    EigenReport,
    FormalConnection,
    LocusSpec,
    ProjectionData,
    classify_weights,
    cohomology_action,
    eigen_linear_forms,
    eigen_monomials,
    exponent_log_bookkeeping,
    formal_connection,
    gauss_manin_matrix,
    induced_map,
    load_projection,
    parse_projection,
    spectra_correspond,
    verify_chain_map,
    verify_exp_relation,
    verify_projection,
)
from .errors import (
    AbelianizationNotPreserved,
    ArrmonoError,
    CertificateInvalid,
    ChainIdentityFailed,
    FactorizationFailed,
    FundamentalIdentityFailed,
    NoSolution,
    NonIntegerRootAtProbe,
    NonzeroConstantTerm,
    NotAComplex,
    NotIdentityAtOne,
    NotInRing,
    ParseError,
    ShapeMismatch,
    VerificationFailed,
    ZeroAtPole,
)
from .fox import (
    Endomorphism,
    Presentation,
    RelatorCertificate,
    Word,
    compose_certificates,
    fox_derivative,
    identity_certificate,
    inner_certificate,
    load_certificate,
    load_endomorphism,
    load_presentation,
    parse_certificate,
    parse_endomorphism,
    parse_presentation,
    parse_word,
    phi1,
    phi2_from_certificate,
    phi2_solve_fallback,
    universal_complex,
)
from .linalg import (
    QQ,
    CharPoly,
    RingComplex,
    RingMatrix,
    SolveResult,
    char_poly,
    evaluate_matrix,
    generic_rank,
    linearize_matrix,
    mat_add,
    mat_exp_truncated,
    mat_mul,
    mat_scale,
    rank_at,
    rational_det,
    rational_rank,
    series_matrix,
    solve_right,
    symbolic_det,
)
from .oscomplex import (
    AomotoComplex,
    OSElement,
    aomoto_boundary,
    cohomology_betti,
    reduce_to_nbc,
    specialize_complex,
)
from .rings import (
    Poly,
    PolyRing,
    TruncatedSeries,
    evaluate,
    exp_substitute,
    laurent_ring,
    linear_part,
    linearize,
    parse_point,
    parse_poly,
    poly_ring,
)
