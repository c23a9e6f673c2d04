"""Exact-arithmetic invariants, arithmetic conditions, bound ladders,
stabilization thresholds and mixed Hodge polynomials for rationally elliptic
exponent data and model spaces."""

from .arithcond import SacReport, check_condition, double_exponent_check, representable
from .bounds import (
    BoundsReport,
    HilaliVerdict,
    bounds_report,
    decompose_projective,
    hilali_verdict,
    inequality_suite,
    q_bound_poly,
)
from .census import CensusEntry, CensusSummary, census_report, enumerate_sac
from .errors import (
    CapExceeded,
    CounterexampleFound,
    DomainError,
    EllipticaError,
    NoExactHomology,
    NonIntegerChi,
    NonPolynomialQuotient,
    ParseError,
    PurityError,
    UnsupportedLeaf,
    ZeroPolynomialError,
)
from .exactpoly import (
    RatPoly,
    SturmCertificate,
    cyclotomic_quotient,
    eval_at,
    geometric_sum,
    is_palindromic,
    positive_on_ray,
    sturm_chain,
)
from .mixedhodge import (
    BoxVerdict,
    MHPoly,
    MHThresholdResult,
    mh_box_inequality,
    mh_box_threshold,
    mh_model,
    mh_pi_model,
    specialize,
)
from .modelspace import (
    ExponentData,
    InvariantReport,
    Product,
    Projective,
    SpaceExpr,
    Sphere,
    exponent_data,
    homology_poincare_model,
    homology_poincare_pure,
    homotopy_poincare,
    invariants,
    parse_space,
    power,
    product,
    render,
)
from .stabilize import ThresholdResult, power_inequality_holds, stabilization_threshold

__all__ = [name for name in dir() if not name.startswith("_")]
