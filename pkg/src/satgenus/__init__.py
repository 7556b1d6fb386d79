"""satgenus: exact Seifert-matrix computations for satellite and cable knots.

Alexander polynomials, Tristram-Levine signature profiles, cyclic
branched-cover homology, Alexander-trivial block certificates for
satellites, and aggregated genus bounds, all over exact integer and
rational arithmetic.
"""

from .exactalg import (
    IntPoly,
    LaurentPoly,
    UnitCirclePoint,
    count_real_roots,
    isolate_real_roots,
    normalize_alexander,
    signature_of_symmetric,
    symmetrize_to_z,
)
from .seifert import (
    AbelianGroup,
    SeifertMatrix,
    TrivialBlockCertificate,
    alexander,
    congruence,
    is_alexander_trivial,
    skew_normalize,
    smith_normal_form,
    stabilize,
    validate,
)
from .satellite import (
    Pattern,
    cable_matrix,
    connected_sum,
    satellite_certificate,
    satellite_matrix,
)
from .invariants import (
    branched_cover_homology,
    homology_order_oracle,
    litherland_homology_check,
    litherland_signature_check,
    signature_at,
    signature_profile,
)
from .bounds import (
    GenusBounds,
    bounds_report,
    cable2q_table,
    galg_upper,
    iterated_cable_arithmetic,
    satellite_bounds,
    schubert_g3,
    search_trivial_block,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroup",
    "GenusBounds",
    "IntPoly",
    "LaurentPoly",
    "Pattern",
    "SeifertMatrix",
    "TrivialBlockCertificate",
    "UnitCirclePoint",
    "alexander",
    "bounds_report",
    "branched_cover_homology",
    "cable2q_table",
    "cable_matrix",
    "congruence",
    "connected_sum",
    "count_real_roots",
    "galg_upper",
    "homology_order_oracle",
    "is_alexander_trivial",
    "isolate_real_roots",
    "iterated_cable_arithmetic",
    "litherland_homology_check",
    "litherland_signature_check",
    "normalize_alexander",
    "satellite_bounds",
    "satellite_certificate",
    "satellite_matrix",
    "schubert_g3",
    "search_trivial_block",
    "signature_at",
    "signature_of_symmetric",
    "signature_profile",
    "skew_normalize",
    "smith_normal_form",
    "stabilize",
    "symmetrize_to_z",
    "validate",
]
