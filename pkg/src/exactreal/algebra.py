"""The ordered-field operation set on reals.

Negation and rational scaling come from unary Lipschitz extension; addition,
min and max from binary non-expanding extension; absolute value is
max(u, -u). Multiplication is local-to-global: pick a rational bound L on
the second factor, then extend q -> q*v as an L-Lipschitz map. The choice
of bound does not affect the result (weak constancy), so a fixed
deterministic bound is used. Reciprocal clamps away from zero at a margin
supplied by an apartness witness.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .extension import LipschitzMapQ, NonexpandingMapQ2, lift_lipschitz, lift_nonexpanding2
from .rationals import ensure_positive, q_max, q_min
from .real_core import RegularReal, from_rational

_neg_lift = lift_lipschitz(
    LipschitzMapQ(apply=lambda q: from_rational(-q), constant=Fraction(1))
)
_add_lift = lift_nonexpanding2(NonexpandingMapQ2(apply=lambda a, b: a + b))
_min_lift = lift_nonexpanding2(NonexpandingMapQ2(apply=q_min))
_max_lift = lift_nonexpanding2(NonexpandingMapQ2(apply=q_max))


def neg(u: RegularReal) -> RegularReal:
    return _neg_lift(u)


def add(u: RegularReal, v: RegularReal) -> RegularReal:
    return _add_lift(u, v)


def sub(u: RegularReal, v: RegularReal) -> RegularReal:
    return add(u, neg(v))


def rmin(u: RegularReal, v: RegularReal) -> RegularReal:
    return _min_lift(u, v)


def rmax(u: RegularReal, v: RegularReal) -> RegularReal:
    return _max_lift(u, v)


def rabs(u: RegularReal) -> RegularReal:
    return rmax(u, neg(u))


def scale_rational(q: Fraction, u: RegularReal) -> RegularReal:
    """q * u by Lipschitz extension of r -> q*r, constant max(|q|, 1)."""
    constant = max(abs(q), Fraction(1))
    lift = lift_lipschitz(
        LipschitzMapQ(apply=lambda r: from_rational(q * r), constant=constant)
    )
    return lift(u)


def bound_above(v: RegularReal) -> Fraction:
    """A rational L with |v| <= L - 1 < L, chosen deterministically from the
    precision-1 approximant."""
    return abs(v.approximate(Fraction(1))) + 2


def bounded_mul(L: Fraction, v: RegularReal):
    """The map u -> u * v, valid whenever |v| <= L, as an L-Lipschitz
    extension of q -> q * v."""
    ensure_positive(L, "bound")
    return lift_lipschitz(
        LipschitzMapQ(apply=lambda q: scale_rational(q, v), constant=L)
    )


def mul(u: RegularReal, v: RegularReal) -> RegularReal:
    return bounded_mul(bound_above(v), v)(u)


def recip_clamped(delta: Fraction):
    """The map u -> 1 / max(u, delta), Lipschitz with constant 1/delta^2.

    Agrees with the exact reciprocal on inputs >= delta; the clamp makes it
    total."""
    ensure_positive(delta, "delta")
    return lift_lipschitz(
        LipschitzMapQ(
            apply=lambda q: from_rational(1 / max(q, delta)),
            constant=1 / delta**2,
        )
    )


class Side(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class ApartnessWitness:
    """Evidence that a real is apart from zero: margin is a positive
    rational with from_rational(margin) <= u (POSITIVE) or
    u <= from_rational(-margin) (NEGATIVE)."""

    side: Side
    margin: Fraction

    def __post_init__(self):
        ensure_positive(self.margin, "margin")


def recip(u: RegularReal, witness: ApartnessWitness) -> RegularReal:
    """The multiplicative inverse of a real certified apart from zero.

    An invalid witness is not detectable at call time; it surfaces as a
    failure of the product law mul(u, recip(u, w)) ~ 1.
    """
    if witness.side is Side.POSITIVE:
        return recip_clamped(witness.margin)(u)
    return neg(recip_clamped(witness.margin)(neg(u)))
