"""Extension combinators: build operations on reals from their rational
restrictions.

A map defined on the rationals that is Lipschitz (or non-expanding, in the
binary case) extends to all reals by querying arguments at a precision
shrunk against the Lipschitz constant. Continuous extensions of the same
rational map are unique up to observation, which `check_extension_agreement`
turns into an executable check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .rationals import ensure_positive
from .real_core import RegularReal, distance_bounds, from_rational


@dataclass(frozen=True)
class LipschitzMapQ:
    """A rational-to-real map with an explicit Lipschitz constant."""

    apply: Callable[[Fraction], RegularReal]
    constant: Fraction

    def __post_init__(self):
        ensure_positive(self.constant, "Lipschitz constant")


@dataclass(frozen=True)
class NonexpandingMapQ2:
    """A binary rational map non-expanding in each argument separately."""

    apply: Callable[[Fraction, Fraction], Fraction]


@dataclass(frozen=True)
class LipschitzMapR:
    """A real-to-real map carrying its Lipschitz constant as data."""

    apply: Callable[[RegularReal], RegularReal]
    constant: Fraction

    def __call__(self, u: RegularReal) -> RegularReal:
        return self.apply(u)


def lift_lipschitz(f: LipschitzMapQ) -> LipschitzMapR:
    """Extend an L-Lipschitz rational map to the reals, same constant.

    Precision split: query the argument at eps/(4L) and the rational map's
    value at eps/2, for a total error of at most 3*eps/4. The lifted map
    agrees with f on rational inputs at every queried precision.
    """
    L = f.constant

    def lifted(u: RegularReal) -> RegularReal:
        return RegularReal(
            lambda eps: f.apply(u.approximate(eps / (4 * L))).approximate(eps / 2)
        )

    return LipschitzMapR(apply=lifted, constant=L)


def lift_nonexpanding2(
    f: NonexpandingMapQ2,
) -> Callable[[RegularReal, RegularReal], RegularReal]:
    """Extend a binary non-expanding rational map to pairs of reals.

    Each argument is queried at eps/4; the two non-expanding contributions
    keep the result regular and the extension non-expanding in each slot.
    Exact on rational pairs.
    """

    def lifted(u: RegularReal, v: RegularReal) -> RegularReal:
        return RegularReal(
            lambda eps: f.apply(u.approximate(eps / 4), v.approximate(eps / 4))
        )

    return lifted


def compose_lipschitz2(
    f: LipschitzMapR,
    g: LipschitzMapR,
    h: Callable[[RegularReal, RegularReal], RegularReal],
    h_constant_1: Fraction,
    h_constant_2: Fraction,
) -> LipschitzMapR:
    """u -> h(f(u), g(u)), Lipschitz with constant N1*L + N2*M where N1, N2
    are h's per-argument constants and L, M those of f and g."""
    constant = h_constant_1 * f.constant + h_constant_2 * g.constant
    return LipschitzMapR(apply=lambda u: h(f(u), g(u)), constant=constant)


@dataclass
class AgreementFailure:
    probe: str
    detail: str


@dataclass
class AgreementReport:
    failures: list[AgreementFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


_RATIONAL_PROBE_PRECISIONS = (Fraction(1), Fraction(1, 8), Fraction(1, 10**6))


def check_extension_agreement(
    fbar: Callable[[RegularReal], RegularReal],
    gbar: Callable[[RegularReal], RegularReal],
    rational_probes: list[Fraction],
    real_probes: list[RegularReal],
    eps: Fraction,
) -> AgreementReport:
    """Executable uniqueness of continuous extensions.

    At rational probes the two maps must produce identical approximants at
    the sampled precisions; at real probes their values must have distance
    upper bound below eps.
    """
    ensure_positive(eps, "eps")
    report = AgreementReport()
    for q in rational_probes:
        fu = fbar(from_rational(q))
        gu = gbar(from_rational(q))
        for prec in _RATIONAL_PROBE_PRECISIONS:
            a, b = fu.approximate(prec), gu.approximate(prec)
            if a != b:
                report.failures.append(
                    AgreementFailure(
                        probe=f"rational {q} @ {prec}", detail=f"{a} != {b}"
                    )
                )
    eta = eps / 8
    for i, u in enumerate(real_probes):
        bounds = distance_bounds(fbar(u), gbar(u), eta)
        if bounds.upper >= eps:
            report.failures.append(
                AgreementFailure(
                    probe=f"real #{i}",
                    detail=f"distance upper bound {bounds.upper} >= {eps}",
                )
            )
    return report
