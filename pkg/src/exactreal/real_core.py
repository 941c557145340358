"""Real numbers as regular rational approximation functions.

A real is a function from a positive rational precision eps to a rational
approximant, regular in the sense that approximants at precisions eps and
delta differ by at most eps + delta. The two ways to build one are
`from_rational` (constant approximants) and `limit` (diagonalizing a Cauchy
family of reals). Closeness of two reals is never decided outright; it is
enclosed by `distance_bounds` and semidecided by `close_semidecide`.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .rationals import ensure_positive


class RegularReal:
    """A real number, queried through `approximate(eps)`.

    The underlying function must be total on positive rationals and regular:
    |approximate(eps) - approximate(delta)| <= eps + delta. Results are
    memoized per instance, so repeated queries at the same precision are
    identical and cheap; the memo table is lock-protected for concurrent use.
    """

    __slots__ = ("_fn", "_memo", "_lock")

    def __init__(self, fn: Callable[[Fraction], Fraction]):
        self._fn = fn
        self._memo: dict[Fraction, Fraction] = {}
        self._lock = threading.Lock()

    def approximate(self, eps: Fraction) -> Fraction:
        ensure_positive(eps, "precision")
        with self._lock:
            cached = self._memo.get(eps)
        if cached is not None:
            return cached
        value = self._fn(eps)
        with self._lock:
            return self._memo.setdefault(eps, value)

    def __repr__(self) -> str:
        return f"RegularReal(~{float(self.approximate(Fraction(1, 1000))):.4f})"


def from_rational(q: Fraction) -> RegularReal:
    """The real denoted by a rational: every approximant is q itself."""
    q = Fraction(q)
    return RegularReal(lambda eps: q)


@dataclass(frozen=True)
class CauchyApproximation:
    """A precision-indexed family of reals with the Cauchy contract:
    members at precisions eps and delta are within eps + delta."""

    at: Callable[[Fraction], RegularReal]


def limit(x: CauchyApproximation) -> RegularReal:
    """The real the family converges to.

    Diagonal split: the approximant at eps is the eps/2-approximant of the
    family member at eps/2, which keeps the result regular.
    """
    return RegularReal(lambda eps: x.at(eps / 2).approximate(eps / 2))


@dataclass(frozen=True)
class DistanceBounds:
    """A rational enclosure of |u - v| computed at slack eta:
    lower <= |u - v| <= upper with upper - lower <= 4*eta."""

    lower: Fraction
    upper: Fraction
    slack: Fraction


def distance_bounds(u: RegularReal, v: RegularReal, eta: Fraction) -> DistanceBounds:
    ensure_positive(eta, "eta")
    d = abs(u.approximate(eta) - v.approximate(eta))
    lower = max(d - 2 * eta, Fraction(0))
    return DistanceBounds(lower=lower, upper=d + 2 * eta, slack=eta)


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def refinement_schedule(target: Fraction, fuel: int):
    """Geometric slack schedule shared by the semidecision procedures:
    eta_k = min(target, 1) * 2^-k for k = 0 .. fuel-1."""
    eta = min(target, Fraction(1))
    for _ in range(fuel):
        yield eta
        eta /= 2


def close_semidecide(
    u: RegularReal, v: RegularReal, eps: Fraction, fuel: int
) -> Verdict:
    """Semidecide whether |u - v| < eps.

    YES and NO are sound; UNKNOWN means the budget ran out before the
    enclosure of |u - v| cleared eps on either side.
    """
    ensure_positive(eps, "eps")
    for eta in refinement_schedule(eps, fuel):
        bounds = distance_bounds(u, v, eta)
        if bounds.upper < eps:
            return Verdict.YES
        if bounds.lower >= eps:
            return Verdict.NO
    return Verdict.UNKNOWN
