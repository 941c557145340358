"""Constructive order on reals.

Strict comparison is only semidecidable: `lt_semidecide` searches for a
rational gap certificate (u + eps <= v) under a refinement budget and its
witnesses are sound, while UNKNOWN carries no negative information. Weak
linearity (`weak_linear`) is the total residue of trichotomy: given rational
q < r, every real is certifiably above q or below r. `between` realizes the
Archimedean property from a gap certificate, and `apart_zero` searches for
the sign evidence reciprocal needs.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import ApartnessWitness, Side, add, sub
from .rationals import DomainError, q_thirds
from .real_core import (
    RegularReal,
    Verdict,
    close_semidecide,
    from_rational,
    refinement_schedule,
)


@dataclass(frozen=True)
class LtWitness:
    """A certificate for u < v: at slack `probe`, the approximants of v and
    u are separated by at least epsilon + 2*probe, which entails
    u + epsilon <= v."""

    epsilon: Fraction
    probe: Fraction


def gap_at(u: RegularReal, v: RegularReal, eta: Fraction) -> LtWitness | None:
    d = v.approximate(eta) - u.approximate(eta)
    if d > 2 * eta:
        return LtWitness(epsilon=d - 2 * eta, probe=eta)
    return None


def lt_semidecide(u: RegularReal, v: RegularReal, fuel: int) -> LtWitness | None:
    """Search for a witness of u < v; None means the budget ran out."""
    for eta in refinement_schedule(Fraction(1), fuel):
        witness = gap_at(u, v, eta)
        if witness is not None:
            return witness
    return None


class Linearity(enum.Enum):
    """Outcome of weak_linear: LEFT certifies q < u, RIGHT certifies u < r."""

    LEFT = "left"
    RIGHT = "right"


def weak_linear(q: Fraction, r: Fraction, u: RegularReal) -> Linearity:
    """Total decision: given q < r, return LEFT (q < u) or RIGHT (u < r).

    Split (q, r) in thirds at s < t, query u at half the smaller margin and
    compare against the midpoint of (s, t). Either answer is sound in the
    overlap; ties go RIGHT.
    """
    if q >= r:
        raise DomainError(f"weak_linear needs q < r, got {q} >= {r}")
    s, t = q_thirds(q, r)
    delta = min(s - q, r - t) / 2
    a = u.approximate(delta)
    if a > (s + t) / 2:
        return Linearity.LEFT
    return Linearity.RIGHT


def between(u: RegularReal, v: RegularReal, witness: LtWitness) -> Fraction:
    """A rational strictly between u and v, given a gap certificate.

    Takes the eps/4-approximant of u shifted by eps/2: the shift clears u by
    at least eps/4 and stays at least eps/4 short of v.
    """
    eps = witness.epsilon
    return u.approximate(eps / 4) + eps / 2


def apart_zero(u: RegularReal, fuel: int) -> ApartnessWitness | None:
    """Search for sign evidence u # 0; None means the budget ran out."""
    for eta in refinement_schedule(Fraction(1), fuel):
        a = u.approximate(eta)
        if a > 2 * eta:
            return ApartnessWitness(side=Side.POSITIVE, margin=a - 2 * eta)
        if -a > 2 * eta:
            return ApartnessWitness(side=Side.NEGATIVE, margin=-a - 2 * eta)
    return None


@dataclass
class PerturbationViolation:
    law: str
    detail: str


@dataclass
class PerturbationReport:
    checked: int = 0
    violations: list[PerturbationViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def perturbation_suite(
    samples: list[RegularReal], eps_grid: list[Fraction], fuel: int
) -> PerturbationReport:
    """Executable battery for the perturbation laws of the strict order.

    For each sample u and grid value eps it checks: u < u + eps is
    certifiable (less-than-perturb); with v := u + eps/2 (so u and v are
    eps-close), u + eps never certifies below v and the approximant bound
    v <= u + eps holds (close-subtract); and w := u - eps stays below
    v + eps at the approximant level (close-add).
    """
    report = PerturbationReport()

    def check(law: str, ok: bool, detail: str):
        report.checked += 1
        if not ok:
            report.violations.append(PerturbationViolation(law=law, detail=detail))

    probes = [Fraction(1, 64), Fraction(1, 1024)]
    for i, u in enumerate(samples):
        for eps in eps_grid:
            bump = from_rational(eps)
            check(
                "less-than-perturb",
                lt_semidecide(u, add(u, bump), fuel) is not None,
                f"sample #{i}: no witness for u < u + {eps}",
            )

            v = add(u, from_rational(eps / 2))
            if close_semidecide(u, v, eps, fuel) is Verdict.YES:
                check(
                    "close-subtract-no-witness",
                    lt_semidecide(add(u, bump), v, fuel) is None,
                    f"sample #{i}: witness for u + {eps} < v despite closeness",
                )
                check(
                    "close-subtract-bound",
                    all(
                        v.approximate(eta) - u.approximate(eta) <= eps + 2 * eta
                        for eta in probes
                    ),
                    f"sample #{i}: v <= u + {eps} refuted at the approximant level",
                )

                w = sub(u, bump)
                if lt_semidecide(w, u, fuel) is not None:
                    check(
                        "close-add-bound",
                        all(
                            w.approximate(eta) - v.approximate(eta) <= eps + 2 * eta
                            for eta in probes
                        ),
                        f"sample #{i}: w < v + {eps} refuted at the approximant level",
                    )
    return report
