"""Exact classification of toric projective-space bundles with b_2 = 2.

The package decides deformation equivalence of bundle tuples (a; kappa),
enumerates complete deformation classes, evaluates the toric-structure
counting step function, builds and recognizes the underlying Delzant
polytopes, constructs explicit move sequences in the s = 1 case, and
generates certified families with arbitrarily many inequivalent toric
structures.  All arithmetic is exact (integers and rationals).
"""

from .census import (
    INFINITE,
    Breakpoint,
    CensusResult,
    InfiniteMarker,
    StepReport,
    census,
    count_at,
    count_at_infinity,
    is_fano,
    is_monotone,
    verify_step_structure,
)
from .equiv import (
    DeformationClass,
    c_bounds,
    deformation_class,
    enumerate_b,
    find_shift,
    k_min,
    sigma2_holds,
)
from .errors import (
    CapRequired,
    CertificateInvalid,
    IndexOutOfRange,
    InvalidKappa,
    LengthMismatch,
    NotABundle,
    NotSimple,
    ParityError,
    ToricError,
    Unbounded,
    ZeroVector,
)
from .families import (
    FamilyCertificate,
    Witness,
    coprime_sequence,
    generate_family,
    lift_class,
)
from .moves import (
    MovePath,
    apply_move,
    e1,
    eij,
    hirzebruch_equiv,
    move_path,
)
from .polytope import (
    BundleTuple,
    DelzantPolytope,
    DelzantReport,
    Facet,
    RecognizedForm,
    Vertex,
    build,
    exact_volume,
    fiber_fingerprint,
    is_delzant,
    nominal_volume,
    recognize,
    transform_polytope,
    vertices,
)
from .symfun import (
    chern_coeffs,
    elem_sym,
    elem_sym_all,
    exponent_vector,
    shift,
    truncated_sym_equal,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "Breakpoint",
    "BundleTuple",
    "CapRequired",
    "CensusResult",
    "CertificateInvalid",
    "DeformationClass",
    "DelzantPolytope",
    "DelzantReport",
    "Facet",
    "FamilyCertificate",
    "IndexOutOfRange",
    "InfiniteMarker",
    "InvalidKappa",
    "LengthMismatch",
    "MovePath",
    "NotABundle",
    "NotSimple",
    "ParityError",
    "RecognizedForm",
    "StepReport",
    "ToricError",
    "Unbounded",
    "Vertex",
    "Witness",
    "ZeroVector",
    "apply_move",
    "build",
    "c_bounds",
    "census",
    "chern_coeffs",
    "coprime_sequence",
    "count_at",
    "count_at_infinity",
    "deformation_class",
    "e1",
    "eij",
    "elem_sym",
    "elem_sym_all",
    "enumerate_b",
    "exact_volume",
    "exponent_vector",
    "fiber_fingerprint",
    "find_shift",
    "generate_family",
    "hirzebruch_equiv",
    "is_delzant",
    "is_fano",
    "is_monotone",
    "k_min",
    "lift_class",
    "move_path",
    "nominal_volume",
    "recognize",
    "shift",
    "sigma2_holds",
    "transform_polytope",
    "truncated_sym_equal",
    "verify_step_structure",
    "vertices",
]
