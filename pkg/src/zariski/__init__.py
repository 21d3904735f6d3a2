"""Exact Zariski decompositions on surface intersection lattices."""

__version__ = "0.1.0"

from .lattice import (  # noqa: E402
    DomainError,
    LatticeError,
    Signature,
    SurfaceLattice,
    genus_from_adjunction,
    hodge_index_check,
    is_negative_definite,
    negativity_bound_check,
    pair,
    signature,
)
from .engine import (  # noqa: E402
    InvariantBreach,
    ScanReport,
    ZariskiResult,
    d1_scan,
    divisibility_criterion,
    fiber_semidefinite_check,
    oracle_decompose,
    rank2_closed_form,
    single_negative_denominator_bound,
    zariski_decompose,
)
from .classification import (  # noqa: E402
    K3FormR2,
    classify_k3_rank2,
    determinant_question_check,
    elliptic_section_lattice,
    enumerate_k3_rank2,
    ruled_lattice,
    third_negative_curve_check,
)
