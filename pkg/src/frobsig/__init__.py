"""Exact computation of Hilbert-Kunz lengths, F-rational signatures and
hypersurface F-signatures over prime fields."""

__version__ = "0.1.0"

from .errors import (
    ArityError,
    DivisionByZero,
    ExponentOverflow,
    FrobsigError,
    InternalError,
    NotNested,
    NotSOP,
    NotZeroDimensional,
    ParseError,
    ResourceLimit,
)
from .groebner import (
    INFINITE,
    GroebnerBasis,
    buchberger,
    count_standard_monomials,
    eliminate,
    krull_dimension,
    leading_ideal,
    normal_form,
)
from .invariants import (
    SearchConfig,
    SignatureReport,
    chain_check,
    csig_estimate,
    deformation_check,
    extrapolate,
    fsig_hypersurface,
    hk_sequence,
    relative_hk,
    rsig_estimate,
    singularity_report,
)
from .parser import parse_polynomial
from .polyfield import (
    MonomialOrder,
    Polynomial,
    PolyRing,
    PrimeField,
    PrimeFieldElement,
    frobenius_power,
    poly_power,
)
from .quotient import (
    IdealInR,
    RingPresentation,
    bracket_power,
    cm_type,
    colength,
    colon_element,
    colon_ideal,
    origin_support_check,
    socle_basis,
    validate_sop,
)
