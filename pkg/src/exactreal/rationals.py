"""Exact rational arithmetic: field operations, lattice helpers, and the
metric toolkit (absolute value, distance, strict epsilon-closeness).

Rationals are `fractions.Fraction` values: arbitrary precision, always in
canonical form (reduced, positive denominator), immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class DomainError(ValueError):
    """An operation was applied outside its domain (e.g. recip(0))."""


def ensure_positive(q: Fraction, what: str = "value") -> Fraction:
    if q <= 0:
        raise DomainError(f"{what} must be positive, got {q}")
    return q


def q_add(q: Fraction, r: Fraction) -> Fraction:
    return q + r


def q_sub(q: Fraction, r: Fraction) -> Fraction:
    return q - r


def q_mul(q: Fraction, r: Fraction) -> Fraction:
    return q * r


def q_neg(q: Fraction) -> Fraction:
    return -q


def q_recip(q: Fraction) -> Fraction:
    if q == 0:
        raise DomainError("reciprocal of zero")
    return 1 / q


def q_cmp(q: Fraction, r: Fraction) -> int:
    """Total order: -1, 0 or 1."""
    if q < r:
        return -1
    if q > r:
        return 1
    return 0


def q_abs(q: Fraction) -> Fraction:
    return abs(q)


def q_dist(q: Fraction, r: Fraction) -> Fraction:
    return abs(q - r)


def q_max(q: Fraction, r: Fraction) -> Fraction:
    # Equals (q+r)/2 + |q-r|/2 exactly; the tests keep that identity honest.
    return q if q >= r else r


def q_min(q: Fraction, r: Fraction) -> Fraction:
    return q if q <= r else r


def q_close(q: Fraction, r: Fraction, eps: Fraction) -> bool:
    """Strict epsilon-closeness: -eps < q - r < eps."""
    ensure_positive(eps, "eps")
    return abs(q - r) < eps


def q_thirds(q: Fraction, r: Fraction) -> tuple[Fraction, Fraction]:
    """The two interior points splitting (q, r) in thirds: q < s < t < r."""
    if q >= r:
        raise DomainError(f"q_thirds needs q < r, got {q} >= {r}")
    step = (r - q) / 3
    return q + step, q + 2 * step


def parse_rational(text: str) -> Fraction:
    """Parse "a/b", an integer literal, or a finite decimal, exactly."""
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise DomainError(f"zero denominator in {text!r}") from None
    except ValueError:
        raise DomainError(f"not a rational literal: {text!r}") from None


def format_rational(q: Fraction) -> str:
    """Canonical form: "-3/4", "5", "0"."""
    return str(q)
