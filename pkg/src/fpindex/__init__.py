"""Exact arithmetic for fixed point index sequences and their consequences.

Four layers: integer sequence algebra (decompositions, congruences,
admissibility), finite self-maps as sequence generators, Lefschetz zeta
functions as exact rational product forms, and periodic-orbit portfolios on
the sphere and disk.  A numerical winding-number engine computes indices of
the built-in planar maps and checks them against the exact formulas.
"""

from .sequences import (
    AdmissibilityCertificate,
    DoldDecomposition,
    IndexSequence,
    NonIntegralCoefficient,
    certify_admissible,
    check_dold_congruences,
    detect_period,
    divisors,
    dold_coefficients,
    from_dold,
    mobius,
    sigma,
)
from .finitemaps import (
    FiniteMap,
    OrbitCensus,
    enumerate_maps,
    fix_count,
    index_sequence_of,
    orbit_census,
    realize_from_certificate,
)
from .zeta import (
    PowerSeries,
    ZetaProductForm,
    equals,
    exp_series,
    expand,
    global_zeta_disk,
    global_zeta_sphere,
    multiply,
    zeta_from_dold,
)
from .portfolio import (
    Disk,
    GrowthBound,
    InconsistentPortfolio,
    InfinitudeTrigger,
    OrbitSpec,
    Other,
    Portfolio,
    Sink,
    Source,
    Sphere,
    StructuralReport,
    ambient_zeta,
    check_consistency,
    growth_lower_bound,
    infinitude_triggers,
    lefschetz_fixed_point_sum,
    local_zeta,
    portfolio_zeta,
    structural_checks,
)
from .planar import (
    DomainError,
    FixedPointOnCurve,
    Point,
    RealizationMap,
    RefinementExhausted,
    SinkExample,
    SourceExample,
    UnboundedExample,
    WindingOptions,
    WindingResult,
    index_sequence_numerical,
    iterate,
    winding_index,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibilityCertificate",
    "DoldDecomposition",
    "IndexSequence",
    "NonIntegralCoefficient",
    "certify_admissible",
    "check_dold_congruences",
    "detect_period",
    "divisors",
    "dold_coefficients",
    "from_dold",
    "mobius",
    "sigma",
    "FiniteMap",
    "OrbitCensus",
    "enumerate_maps",
    "fix_count",
    "index_sequence_of",
    "orbit_census",
    "realize_from_certificate",
    "PowerSeries",
    "ZetaProductForm",
    "equals",
    "exp_series",
    "expand",
    "global_zeta_disk",
    "global_zeta_sphere",
    "multiply",
    "zeta_from_dold",
    "Disk",
    "GrowthBound",
    "InconsistentPortfolio",
    "InfinitudeTrigger",
    "OrbitSpec",
    "Other",
    "Portfolio",
    "Sink",
    "Source",
    "Sphere",
    "StructuralReport",
    "ambient_zeta",
    "check_consistency",
    "growth_lower_bound",
    "infinitude_triggers",
    "lefschetz_fixed_point_sum",
    "local_zeta",
    "portfolio_zeta",
    "structural_checks",
    "DomainError",
    "FixedPointOnCurve",
    "Point",
    "RealizationMap",
    "RefinementExhausted",
    "SinkExample",
    "SourceExample",
    "UnboundedExample",
    "WindingOptions",
    "WindingResult",
    "index_sequence_numerical",
    "iterate",
    "winding_index",
]
