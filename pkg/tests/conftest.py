"""Shared helpers: independent oracles and sample generators.

The exact-value oracle for closed rational expressions evaluates the AST
directly with Fraction arithmetic, touching none of the library's
extension machinery; `sqrt2_to` brackets sqrt(2) through integer square
roots. Library results are checked against these, never the other way
round.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import pytest

from exactreal import expressions as ex
from exactreal.real_core import CauchyApproximation, RegularReal, from_rational, limit


def exact_rational_value(e: ex.Expr) -> Fraction:
    """Direct Fraction evaluation of a sqrt-free expression."""
    if isinstance(e, ex.Lit):
        return e.value
    if isinstance(e, ex.Neg):
        return -exact_rational_value(e.operand)
    if isinstance(e, ex.Add):
        return exact_rational_value(e.left) + exact_rational_value(e.right)
    if isinstance(e, ex.Sub):
        return exact_rational_value(e.left) - exact_rational_value(e.right)
    if isinstance(e, ex.Mul):
        return exact_rational_value(e.left) * exact_rational_value(e.right)
    if isinstance(e, ex.Div):
        return exact_rational_value(e.left) / exact_rational_value(e.right)
    if isinstance(e, ex.Recip):
        return 1 / exact_rational_value(e.operand)
    if isinstance(e, ex.Min):
        return min(exact_rational_value(e.left), exact_rational_value(e.right))
    if isinstance(e, ex.Max):
        return max(exact_rational_value(e.left), exact_rational_value(e.right))
    if isinstance(e, ex.Abs):
        return abs(exact_rational_value(e.operand))
    raise ValueError(f"not a rational expression node: {e!r}")


def gen_rational_expr(rng: random.Random, depth: int) -> ex.Expr:
    """Random sqrt-free closed expression; divisions never hit zero."""
    if depth == 0 or rng.random() < 0.3:
        return ex.Lit(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
    kind = rng.randrange(8)
    if kind == 0:
        return ex.Neg(gen_rational_expr(rng, depth - 1))
    if kind == 1:
        return ex.Abs(gen_rational_expr(rng, depth - 1))
    left = gen_rational_expr(rng, depth - 1)
    right = gen_rational_expr(rng, depth - 1)
    if kind == 2:
        return ex.Add(left, right)
    if kind == 3:
        return ex.Sub(left, right)
    if kind == 4:
        return ex.Mul(left, right)
    if kind == 5:
        return ex.Min(left, right)
    if kind == 6:
        return ex.Max(left, right)
    # Keep divisors clear of zero so apartness search succeeds in bounded
    # fuel; near-zero divisors degrade into addition.
    if abs(exact_rational_value(right)) < Fraction(1, 1000):
        return ex.Add(left, right)
    return ex.Div(left, right)


def sqrt2_to(err: Fraction) -> Fraction:
    """A rational within err of sqrt(2), via integer square roots."""
    n = max(2 * err.denominator // err.numerator, 2)
    return Fraction(math.isqrt(2 * n * n), n)


def sqrt_rational_to(c: Fraction, err: Fraction) -> Fraction:
    """A rational within err of sqrt(c) for c >= 0, integer-sqrt route."""
    if c == 0:
        return Fraction(0)
    a, b = c.numerator, c.denominator
    n = -(-err.denominator // (err.numerator * b))
    n = max(n, 1)
    return Fraction(math.isqrt(a * b * n * n), b * n)


@pytest.fixture
def sqrt2_real() -> RegularReal:
    """sqrt(2) as a limit of truncated integer-square-root rationals."""
    return limit(
        CauchyApproximation(at=lambda eps: from_rational(sqrt2_to(eps)))
    )
