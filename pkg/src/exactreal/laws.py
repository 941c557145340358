"""Ordered-field law suite over seeded random samples.

Samples are generated as expression trees (rationals, square roots, sums
and products of those) so every sample can be evaluated twice: through the
library's extension-based algebra and through the independent interval
oracle. Each law is checked as a distance enclosure: both sides are
queried at slack eps/8, and the upper bound on their distance must come in
under eps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import expressions as ex
from .algebra import add, bound_above, bounded_mul, mul, neg, rabs, recip, rmax, rmin, sub
from .evaluator import EvalConfig, eval_expr
from .order import Linearity, apart_zero, between, lt_semidecide, weak_linear
from .real_core import RegularReal, distance_bounds, from_rational

DEFAULT_EPSILON = Fraction(1, 10**9)
DEFAULT_SAMPLES = 200
DEFAULT_FUEL = 60


def random_rational(rng: random.Random, span: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def sample_exprs(rng: random.Random, count: int) -> list[ex.Expr]:
    """A mix of rational literals, sqrt-built limits, and sums/products."""
    out: list[ex.Expr] = []
    for _ in range(count):
        kind = rng.randrange(5)
        if kind == 0:
            out.append(ex.Lit(abs(random_rational(rng))))
        elif kind == 1:
            out.append(ex.Neg(ex.Lit(abs(random_rational(rng)))))
        elif kind == 2:
            out.append(ex.Sqrt(ex.Lit(abs(random_rational(rng)))))
        elif kind == 3:
            out.append(
                ex.Add(ex.Sqrt(ex.Lit(Fraction(rng.randint(0, 9)))),
                       ex.Lit(random_rational(rng)))
            )
        else:
            out.append(
                ex.Mul(ex.Sqrt(ex.Lit(Fraction(rng.randint(0, 9)))),
                       ex.Lit(random_rational(rng)))
            )
    return out


def sample_reals(rng: random.Random, count: int,
                 cfg: EvalConfig | None = None) -> list[RegularReal]:
    cfg = cfg or EvalConfig()
    return [eval_expr(e, cfg) for e in sample_exprs(rng, count)]


@dataclass
class LawViolation:
    law: str
    detail: str


@dataclass
class LawReport:
    checked: int = 0
    violations: list[LawViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _check_equal(report: LawReport, law: str, lhs: RegularReal, rhs: RegularReal,
                 eps: Fraction, detail: str = ""):
    report.checked += 1
    bounds = distance_bounds(lhs, rhs, eps / 8)
    if bounds.upper >= eps:
        report.violations.append(
            LawViolation(law=law, detail=f"{detail} upper bound {bounds.upper} >= {eps}")
        )


def run_law_suite(samples: int = DEFAULT_SAMPLES,
                  epsilon: Fraction = DEFAULT_EPSILON,
                  seed: int = 0,
                  fuel: int = DEFAULT_FUEL) -> LawReport:
    """Check the ring, lattice, and order-compatibility laws on a seeded
    sample set; every violation is a report entry."""
    rng = random.Random(seed)
    cfg = EvalConfig(fuel=fuel, seed=seed)
    reals = sample_reals(rng, samples, cfg)
    report = LawReport()
    zero = from_rational(Fraction(0))
    one = from_rational(Fraction(1))

    def triples():
        for i in range(0, len(reals) - 2, 3):
            yield reals[i], reals[i + 1], reals[i + 2]

    for u, v, w in triples():
        # Abelian group laws for addition.
        _check_equal(report, "add-assoc", add(add(u, v), w), add(u, add(v, w)), epsilon)
        _check_equal(report, "add-comm", add(u, v), add(v, u), epsilon)
        _check_equal(report, "add-unit", add(u, zero), u, epsilon)
        _check_equal(report, "add-inverse", add(u, neg(u)), zero, epsilon)

        # Lattice laws for min/max.
        _check_equal(report, "max-assoc", rmax(rmax(u, v), w), rmax(u, rmax(v, w)), epsilon)
        _check_equal(report, "min-comm", rmin(u, v), rmin(v, u), epsilon)
        _check_equal(report, "max-idem", rmax(u, u), u, epsilon)
        _check_equal(report, "absorption", rmax(u, rmin(u, v)), u, epsilon)

        # Translation invariance: max(a+u, a+v) = a + max(u, v).
        _check_equal(report, "max-translation",
                     rmax(add(w, u), add(w, v)), add(w, rmax(u, v)), epsilon)

        # Commutative ring laws for multiplication.
        _check_equal(report, "mul-comm", mul(u, v), mul(v, u), epsilon)
        _check_equal(report, "mul-assoc", mul(mul(u, v), w), mul(u, mul(v, w)), epsilon)
        _check_equal(report, "mul-unit", mul(u, one), u, epsilon)
        _check_equal(report, "distrib",
                     mul(u, add(v, w)), add(mul(u, v), mul(u, w)), epsilon)

        # Magnitude identity: |a*u - a*v| = |a| * |u - v|.
        _check_equal(report, "magnitude",
                     rabs(sub(mul(w, u), mul(w, v))),
                     mul(rabs(w), rabs(sub(u, v))), epsilon)

        # Weak constancy: the multiplication bound does not matter.
        L = bound_above(v)
        _check_equal(report, "weak-constancy",
                     bounded_mul(L, v)(u), bounded_mul(L + 3, v)(u), epsilon)

    # Order-side checks on the same samples.
    for i, u in enumerate(reals):
        report.checked += 1
        if lt_semidecide(u, u, min(fuel, 20)) is not None:
            report.violations.append(
                LawViolation(law="lt-irreflexive", detail=f"sample #{i}"))

        q = random_rational(rng)
        r = q + Fraction(rng.randint(1, 5), rng.randint(1, 5))
        side = weak_linear(q, r, u)
        # Sound disjunct: the guaranteed margin of (r-q)/3 survives an
        # enclosure of u at slack (r-q)/8, so the check can be strict.
        gap = (r - q) / 8
        a = u.approximate(gap)
        report.checked += 1
        if side is Linearity.LEFT and not a - gap > q:
            report.violations.append(
                LawViolation(law="weak-linear-left", detail=f"sample #{i}"))
        if side is Linearity.RIGHT and not a + gap < r:
            report.violations.append(
                LawViolation(law="weak-linear-right", detail=f"sample #{i}"))

        # Archimedean: a certified gap yields a separating rational.
        v = add(u, from_rational(Fraction(1 + i % 3)))
        witness = lt_semidecide(u, v, fuel)
        report.checked += 1
        if witness is None:
            report.violations.append(
                LawViolation(law="between-witness", detail=f"sample #{i}: no witness"))
        else:
            m = between(u, v, witness)
            eta = witness.epsilon / 16
            ok = (u.approximate(eta) + eta < m) and (m < v.approximate(eta) - eta)
            if not ok:
                report.violations.append(
                    LawViolation(law="between-sound", detail=f"sample #{i}"))

        # Apartness + inverse law where a witness is found.
        shifted = add(u, from_rational(Fraction(2)))
        w = apart_zero(shifted, fuel)
        if w is not None:
            _check_equal(report, "recip-inverse",
                         mul(shifted, recip(shifted, w)), one, epsilon,
                         detail=f"sample #{i}:")
    return report
