"""Independent correctness oracle.

Evaluates closed expressions to rational enclosures by direct interval
arithmetic with exact rational endpoints: no extension combinators, no
RegularReal plumbing, so agreement with the library is a genuine
cross-check. Square roots use integer square roots with outward rounding;
everything else is exact endpoint arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import expressions as ex
from .rationals import DomainError, ensure_positive
from .real_core import RegularReal


class IndeterminateDivisionError(ValueError):
    """The divisor's enclosure still contained zero at maximum refinement."""


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, q: Fraction) -> bool:
        return self.lo <= q <= self.hi


class _NeedsRefinement(Exception):
    pass


def isqrt_bounds(c: Fraction, slack: Fraction) -> tuple[Fraction, Fraction]:
    """Rational lo <= sqrt(c) <= hi with hi - lo <= slack, for c >= 0.

    sqrt(a/b) = sqrt(a*b) / b; bracketing the integer square root of
    a*b*n^2 gives endpoints 1/(b*n) apart.
    """
    if c < 0:
        raise DomainError(f"square root of negative rational {c}")
    if c == 0:
        return Fraction(0), Fraction(0)
    ensure_positive(slack, "slack")
    a, b = c.numerator, c.denominator
    n = -(-slack.denominator // (slack.numerator * b))  # ceil(1/(slack*b))
    n = max(n, 1)
    k = math.isqrt(a * b * n * n)
    return Fraction(k, b * n), Fraction(k + 1, b * n)


def _mul_interval(x: RationalInterval, y: RationalInterval) -> RationalInterval:
    products = [x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi]
    return RationalInterval(min(products), max(products))


def _eval(e: ex.Expr, slack: Fraction) -> RationalInterval:
    if isinstance(e, ex.Lit):
        return RationalInterval(e.value, e.value)
    if isinstance(e, ex.Neg):
        i = _eval(e.operand, slack)
        return RationalInterval(-i.hi, -i.lo)
    if isinstance(e, ex.Add):
        a, b = _eval(e.left, slack), _eval(e.right, slack)
        return RationalInterval(a.lo + b.lo, a.hi + b.hi)
    if isinstance(e, ex.Sub):
        a, b = _eval(e.left, slack), _eval(e.right, slack)
        return RationalInterval(a.lo - b.hi, a.hi - b.lo)
    if isinstance(e, ex.Mul):
        return _mul_interval(_eval(e.left, slack), _eval(e.right, slack))
    if isinstance(e, (ex.Div, ex.Recip)):
        if isinstance(e, ex.Div):
            num = _eval(e.left, slack)
            den = _eval(e.right, slack)
        else:
            num = RationalInterval(Fraction(1), Fraction(1))
            den = _eval(e.operand, slack)
        if den.lo <= 0 <= den.hi:
            raise _NeedsRefinement
        inv = RationalInterval(1 / den.hi, 1 / den.lo)
        return _mul_interval(num, inv)
    if isinstance(e, ex.Min):
        a, b = _eval(e.left, slack), _eval(e.right, slack)
        return RationalInterval(min(a.lo, b.lo), min(a.hi, b.hi))
    if isinstance(e, ex.Max):
        a, b = _eval(e.left, slack), _eval(e.right, slack)
        return RationalInterval(max(a.lo, b.lo), max(a.hi, b.hi))
    if isinstance(e, ex.Abs):
        i = _eval(e.operand, slack)
        if i.lo >= 0:
            return i
        if i.hi <= 0:
            return RationalInterval(-i.hi, -i.lo)
        return RationalInterval(Fraction(0), max(-i.lo, i.hi))
    if isinstance(e, ex.Sqrt):
        i = _eval(e.operand, slack)
        if i.hi < 0:
            raise DomainError("square root of a negative value")
        lo_in = max(i.lo, Fraction(0))
        lo, _ = isqrt_bounds(lo_in, slack)
        _, hi = isqrt_bounds(i.hi, slack)
        return RationalInterval(lo, hi)
    raise TypeError(f"not an expression node: {e!r}")


_MAX_REFINEMENTS = 64


def interval_eval(e: ex.Expr, precision: Fraction) -> RationalInterval:
    """Sound rational enclosure of the value of e, refined until the width
    is at most 2*precision (and every divisor clears zero)."""
    ensure_positive(precision, "precision")
    slack = precision
    for _ in range(_MAX_REFINEMENTS):
        try:
            result = _eval(e, slack)
        except _NeedsRefinement:
            slack /= 4
            continue
        if result.width <= 2 * precision:
            return result
        slack /= 4
    raise IndeterminateDivisionError(
        "enclosure did not converge: a divisor may be zero"
    )


def agree(u: RegularReal, i: RationalInterval, eps: Fraction) -> bool:
    """True iff u's eps-approximant lies in [i.lo - eps, i.hi + eps]."""
    a = u.approximate(eps)
    return i.lo - eps <= a <= i.hi + eps
