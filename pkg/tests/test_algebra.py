import random
from fractions import Fraction

from conftest import sqrt2_to

from exactreal.algebra import (
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
from exactreal.real_core import (
    Verdict,
    close_semidecide,
    distance_bounds,
    from_rational,
)

EPS = Fraction(1, 10**9)


def assert_same_real(u, v, eps=EPS):
    assert distance_bounds(u, v, eps / 8).upper < eps


class TestNegation:
    def test_rational(self):
        assert neg(from_rational(Fraction(3))).approximate(Fraction(1, 7)) == -3

    def test_zero_fixed_point(self):
        zero = from_rational(Fraction(0))
        for eps in (Fraction(1), Fraction(1, 10**6)):
            assert neg(zero).approximate(eps) == 0

    def test_sqrt2(self, sqrt2_real):
        eps = Fraction(1, 10**6)
        got = neg(sqrt2_real).approximate(eps)
        assert abs(got + sqrt2_to(Fraction(1, 10**12))) <= eps + Fraction(1, 10**12)

    def test_involution(self, sqrt2_real):
        assert_same_real(neg(neg(sqrt2_real)), sqrt2_real)


class TestAddMinMax:
    def test_two_plus_two(self):
        two = from_rational(Fraction(2))
        for eps in (Fraction(1), Fraction(1, 10**9)):
            assert add(two, two).approximate(eps) == 4

    def test_max_rationals(self):
        u = rmax(from_rational(Fraction(1)), from_rational(Fraction(3)))
        assert u.approximate(Fraction(1, 2)) == 3

    def test_add_unit(self, sqrt2_real):
        # Both sides denote the same real, so approximants at slack eta sit
        # within eta of it and the enclosure upper bound is at most 4*eta.
        total = add(sqrt2_real, from_rational(Fraction(0)))
        for eta in (Fraction(1, 4), Fraction(1, 1024)):
            assert distance_bounds(total, sqrt2_real, eta).upper <= 4 * eta

    def test_min_max_recover_endpoints(self, sqrt2_real):
        v = from_rational(Fraction(3, 2))
        assert_same_real(add(rmin(sqrt2_real, v), rmax(sqrt2_real, v)),
                         add(sqrt2_real, v))


class TestAbs:
    def test_rational(self):
        assert rabs(from_rational(Fraction(-3))).approximate(Fraction(1)) == 3

    def test_symmetry(self, sqrt2_real):
        assert_same_real(rabs(sqrt2_real), rabs(neg(sqrt2_real)))

    def test_sqrt2_offset(self, sqrt2_real):
        u = rabs(sub(sqrt2_real, from_rational(Fraction(3, 2))))
        eps = Fraction(1, 10**6)
        reference = Fraction(3, 2) - sqrt2_to(Fraction(1, 10**12))
        assert abs(u.approximate(eps) - reference) <= eps + Fraction(1, 10**12)


class TestScaleAndBound:
    def test_scale_rational_exact(self):
        u = scale_rational(Fraction(1, 2), from_rational(Fraction(6)))
        assert u.approximate(Fraction(1, 3)) == 3

    def test_scale_by_zero(self, sqrt2_real):
        u = scale_rational(Fraction(0), sqrt2_real)
        for eps in (Fraction(1), Fraction(1, 10**6)):
            assert u.approximate(eps) == 0

    def test_bound_above_examples(self, sqrt2_real):
        assert bound_above(from_rational(Fraction(3))) == 5
        assert bound_above(from_rational(Fraction(0))) == 2
        L = bound_above(sqrt2_real)
        assert L == abs(sqrt2_real.approximate(Fraction(1))) + 2
        # Validity: |sqrt(2)| <= L - 1.
        assert sqrt2_to(Fraction(1, 10**6)) + Fraction(1, 10**6) <= L - 1


class TestMultiplication:
    def test_rational_chain_exact(self):
        prod = mul(from_rational(Fraction(2)), from_rational(Fraction(3)))
        for eps in (Fraction(1), Fraction(1, 10**9)):
            assert prod.approximate(eps) == 6

    def test_unit_law(self, sqrt2_real):
        assert_same_real(mul(sqrt2_real, from_rational(Fraction(1))), sqrt2_real)

    def test_sqrt2_squared(self, sqrt2_real):
        prod = mul(sqrt2_real, sqrt2_real)
        eps = Fraction(1, 10**6)
        assert abs(prod.approximate(eps) - 2) <= 2 * eps

    def test_bounded_mul_rational_pair(self):
        b = bounded_mul(Fraction(5), from_rational(Fraction(3)))
        assert b(from_rational(Fraction(2))).approximate(Fraction(1, 9)) == 6
        assert b(from_rational(Fraction(0))).approximate(Fraction(1)) == 0

    def test_weak_constancy(self, sqrt2_real):
        v = from_rational(Fraction(3))
        for L, M in ((Fraction(5), Fraction(7)), (Fraction(4), Fraction(100))):
            assert_same_real(bounded_mul(L, v)(sqrt2_real),
                             bounded_mul(M, v)(sqrt2_real))

    def test_separate_continuity_first_argument(self, sqrt2_real):
        # u ~ u' within eps: products cannot be refuted at L*eps.
        v = from_rational(Fraction(7, 3))
        L = bound_above(v)
        u = sqrt2_real
        shifted = add(sqrt2_real, from_rational(Fraction(1, 100)))
        eps = Fraction(1, 50)
        assert close_semidecide(u, shifted, eps, 25) is Verdict.YES
        verdict = close_semidecide(
            bounded_mul(L, v)(u), bounded_mul(L, v)(shifted),
            L * eps + Fraction(1, 10**12), 25,
        )
        assert verdict is not Verdict.NO

    def test_magnitude_identity(self, sqrt2_real):
        a = from_rational(Fraction(-5, 2))
        u = sqrt2_real
        v = from_rational(Fraction(1, 3))
        assert_same_real(rabs(sub(mul(a, u), mul(a, v))),
                         mul(rabs(a), rabs(sub(u, v))))


class TestReciprocal:
    def test_clamped_exact_above_delta(self):
        r = recip_clamped(Fraction(1, 2))
        assert r(from_rational(Fraction(2))).approximate(Fraction(1, 9)) == Fraction(1, 2)

    def test_clamp_active_at_zero(self):
        r = recip_clamped(Fraction(1, 2))
        assert r(from_rational(Fraction(0))).approximate(Fraction(1, 9)) == 2

    def test_clamped_product_law_on_rationals(self):
        delta = Fraction(1, 3)
        r = recip_clamped(delta)
        for q in (delta, Fraction(1), Fraction(17, 3)):
            inv = r(from_rational(q)).approximate(Fraction(1, 10**6))
            assert inv * q == 1

    def test_positive_witness(self):
        u = from_rational(Fraction(4))
        w = ApartnessWitness(side=Side.POSITIVE, margin=Fraction(1))
        assert recip(u, w).approximate(Fraction(1, 5)) == Fraction(1, 4)

    def test_negative_witness(self):
        u = from_rational(Fraction(-4))
        w = ApartnessWitness(side=Side.NEGATIVE, margin=Fraction(1))
        assert recip(u, w).approximate(Fraction(1, 5)) == Fraction(-1, 4)

    def test_inverse_law_sqrt2(self, sqrt2_real):
        w = ApartnessWitness(side=Side.POSITIVE, margin=Fraction(1))
        prod = mul(sqrt2_real, recip(sqrt2_real, w))
        eps = Fraction(1, 10**6)
        assert abs(prod.approximate(eps) - 1) <= 2 * eps


class TestGroupAndLatticeLaws:
    def test_sampled_laws(self, sqrt2_real):
        rng = random.Random(4)
        rats = [from_rational(Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
                for _ in range(6)]
        samples = rats + [sqrt2_real, add(sqrt2_real, rats[0])]
        for i in range(len(samples) - 2):
            u, v, w = samples[i], samples[i + 1], samples[i + 2]
            assert_same_real(add(add(u, v), w), add(u, add(v, w)))
            assert_same_real(add(u, v), add(v, u))
            assert_same_real(add(u, neg(u)), from_rational(Fraction(0)))
            assert_same_real(rmax(rmax(u, v), w), rmax(u, rmax(v, w)))
            assert_same_real(rmin(u, v), rmin(v, u))
            assert_same_real(rmax(u, rmin(u, v)), u)
            assert_same_real(rmax(add(w, u), add(w, v)), add(w, rmax(u, v)))
            assert_same_real(mul(u, v), mul(v, u))
            assert_same_real(mul(mul(u, v), w), mul(u, mul(v, w)))
            assert_same_real(mul(u, add(v, w)), add(mul(u, v), mul(u, w)))
