"""Expression evaluation over the real algebra, decimal printing, and the
two-directional comparison loop.

Division is the only partial spot: it needs positive evidence that the
divisor is apart from zero, found by `apart_zero` under the configured
fuel. Square root is a demo of the `limit` constructor: a Cauchy family of
Newton approximants, one per requested precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import expressions as ex
from .algebra import add, mul, neg, rabs, recip, rmax, rmin, sub
from .order import gap_at, apart_zero, lt_semidecide
from .rationals import DomainError, ensure_positive
from .real_core import (
    CauchyApproximation,
    RegularReal,
    from_rational,
    limit,
    refinement_schedule,
)


class ApartnessFuelError(ValueError):
    """apart_zero exhausted its fuel; the divisor may be zero."""


@dataclass(frozen=True)
class EvalConfig:
    digits: int = 12
    fuel: int = 60
    seed: int = 0

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError("digits must be >= 1")
        if self.fuel < 1:
            raise ValueError("fuel must be >= 1")


def newton_sqrt(c: Fraction, err: Fraction) -> Fraction:
    """A rational x with sqrt(c) <= x <= sqrt(c) + err, for c >= 0.

    Newton iteration from seed max(c, 1); the bracket [c/x, x] certifies the
    per-step error, so the loop exits exactly when the bound is met.
    """
    if c < 0:
        raise DomainError(f"newton_sqrt of negative rational {c}")
    ensure_positive(err, "err")
    if c == 0:
        return Fraction(0)
    x = max(c, Fraction(1))
    while x - c / x > err:
        x = (x + c / x) / 2
    return x


_NEGATIVITY_FUEL = 20


def sqrt_real(u: RegularReal, fuel: int) -> RegularReal:
    """Square root of max(u, 0) via `limit` over Newton approximants.

    Refutably negative inputs are rejected; values not refutably negative
    are clamped at zero, so sqrt(2 - 2) is 0 rather than an error.
    """
    if lt_semidecide(u, from_rational(Fraction(0)), min(fuel, _NEGATIVITY_FUEL)):
        raise DomainError("square root of a refutably negative value")

    def member(eps: Fraction) -> RegularReal:
        # |sqrt(a) - sqrt(b)| <= sqrt(|a - b|), so querying u at eps^2/4
        # costs eps/2; Newton contributes the other eps/2.
        a = max(u.approximate(eps * eps / 4), Fraction(0))
        return from_rational(newton_sqrt(a, eps / 2))

    return limit(CauchyApproximation(at=member))


def eval_expr(e: ex.Expr, cfg: EvalConfig) -> RegularReal:
    """Compositional evaluation of a closed expression to a real."""
    if isinstance(e, ex.Lit):
        return from_rational(e.value)
    if isinstance(e, ex.Neg):
        return neg(eval_expr(e.operand, cfg))
    if isinstance(e, ex.Add):
        return add(eval_expr(e.left, cfg), eval_expr(e.right, cfg))
    if isinstance(e, ex.Sub):
        return sub(eval_expr(e.left, cfg), eval_expr(e.right, cfg))
    if isinstance(e, ex.Mul):
        return mul(eval_expr(e.left, cfg), eval_expr(e.right, cfg))
    if isinstance(e, ex.Min):
        return rmin(eval_expr(e.left, cfg), eval_expr(e.right, cfg))
    if isinstance(e, ex.Max):
        return rmax(eval_expr(e.left, cfg), eval_expr(e.right, cfg))
    if isinstance(e, ex.Abs):
        return rabs(eval_expr(e.operand, cfg))
    if isinstance(e, ex.Div):
        return mul(eval_expr(e.left, cfg), _inverse(eval_expr(e.right, cfg), cfg))
    if isinstance(e, ex.Recip):
        return _inverse(eval_expr(e.operand, cfg), cfg)
    if isinstance(e, ex.Sqrt):
        return sqrt_real(eval_expr(e.operand, cfg), cfg.fuel)
    raise TypeError(f"not an expression node: {e!r}")


def _inverse(v: RegularReal, cfg: EvalConfig) -> RegularReal:
    witness = apart_zero(v, cfg.fuel)
    if witness is None:
        raise ApartnessFuelError("cannot verify divisor apart from zero")
    return recip(v, witness)


def print_decimal(u: RegularReal, digits: int) -> str:
    """Decimal string with `digits` fractional digits and total error at
    most 10^-digits: query at 10^-(digits+1), round half away from zero."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    q = u.approximate(Fraction(1, 10 ** (digits + 1)))
    scaled = abs(q) * 10**digits
    units = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if q < 0 and units > 0 else ""
    whole, frac = divmod(units, 10**digits)
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


@dataclass(frozen=True)
class ComparisonOutcome:
    result: str  # "LT" | "GT" | "UNKNOWN"
    last_probe: Fraction


def compare_reals(u: RegularReal, v: RegularReal, fuel: int) -> ComparisonOutcome:
    """Interleaved two-directional semidecision under one fuel budget."""
    eta = Fraction(1)
    for eta in refinement_schedule(Fraction(1), fuel):
        if gap_at(u, v, eta) is not None:
            return ComparisonOutcome(result="LT", last_probe=eta)
        if gap_at(v, u, eta) is not None:
            return ComparisonOutcome(result="GT", last_probe=eta)
    return ComparisonOutcome(result="UNKNOWN", last_probe=eta)
