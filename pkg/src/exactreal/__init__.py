"""Exact real arithmetic: reals as regular rational approximation
functions, with extension-based algebra, semidecidable order, an
independent interval oracle, and an HTTP/CLI calculator on top."""

from .algebra import (
    ApartnessWitness,
    Side,
    add,
    bound_above,
    bounded_mul,
    mul,
    neg,
    rabs,
    recip,
    recip_clamped,
    rmax,
    rmin,
    scale_rational,
    sub,
)
from .extension import (
    LipschitzMapQ,
    LipschitzMapR,
    NonexpandingMapQ2,
    check_extension_agreement,
    compose_lipschitz2,
    lift_lipschitz,
    lift_nonexpanding2,
)
from .order import (
    Linearity,
    LtWitness,
    apart_zero,
    between,
    lt_semidecide,
    perturbation_suite,
    weak_linear,
)
from .rationals import DomainError, Rational, parse_rational
from .real_core import (
    CauchyApproximation,
    DistanceBounds,
    RegularReal,
    Verdict,
    close_semidecide,
    distance_bounds,
    from_rational,
    limit,
)

__all__ = [
    "ApartnessWitness",
    "CauchyApproximation",
    "DistanceBounds",
    "DomainError",
    "Linearity",
    "LipschitzMapQ",
    "LipschitzMapR",
    "LtWitness",
    "NonexpandingMapQ2",
    "Rational",
    "RegularReal",
    "Side",
    "Verdict",
    "add",
    "apart_zero",
    "between",
    "bound_above",
    "bounded_mul",
    "check_extension_agreement",
    "close_semidecide",
    "compose_lipschitz2",
    "distance_bounds",
    "from_rational",
    "lift_lipschitz",
    "lift_nonexpanding2",
    "limit",
    "lt_semidecide",
    "mul",
    "neg",
    "parse_rational",
    "perturbation_suite",
    "rabs",
    "recip",
    "recip_clamped",
    "rmax",
    "rmin",
    "scale_rational",
    "sub",
    "weak_linear",
]
