"""Displacement geometry: complex lengths, omega, tubes, the pairing value."""

import random
from fractions import Fraction

import pytest

from margulis import hypgeom, rigor
from margulis.hypgeom import (
    ComplexLength,
    acorn_bound,
    asymptotic_constant,
    complex_length_from_trace,
    margulis_pair_value,
    oak_bound,
    omega,
    phi,
    phi_branches,
    trace_ellipse_margin,
    trace_from_complex_length,
    tube_radius,
    zagier_n,
)
from margulis.numfield import IntPolynomial, roots_cubic
from margulis.rigor import (
    ComplexBox,
    DomainError,
    Interval,
    MatchVerdict,
    cosh,
    log3_interval,
    matches_decimal,
    pi_interval,
    sinh,
)


def imag_root_box(coeffs) -> ComplexBox:
    roots = roots_cubic(IntPolynomial.of(*coeffs))
    return next(r.root_box for r in roots if r.root_box.im.lo > 0)


def theta_over_pi(length: ComplexLength) -> Interval:
    return length.theta / pi_interval()


class TestComplexLength:
    def test_case_a_root(self):
        # trace from the certified complex root of x^3-5x^2+4x-1
        tau = imag_root_box([1, -5, 4, -1])
        assert matches_decimal(tau.re, "0.4602...") is MatchVerdict.PASS
        assert matches_decimal(tau.im, "0.182582...") is MatchVerdict.PASS
        L = complex_length_from_trace(tau)
        assert matches_decimal(L.l, "0.1872...") is MatchVerdict.PASS
        assert matches_decimal(theta_over_pi(L), "0.8528...") is MatchVerdict.PASS

    def test_case_b_root(self):
        tau = imag_root_box([1, 2, -3, 1])
        assert matches_decimal(tau.re, "0.539797...") is MatchVerdict.PASS
        L = complex_length_from_trace(tau)
        assert matches_decimal(L.l, "0.18927...") is MatchVerdict.PASS
        assert matches_decimal(theta_over_pi(L), "0.8268...") is MatchVerdict.PASS

    def test_case_c_root(self):
        tau = imag_root_box([1, 3, -14, 11])
        L = complex_length_from_trace(tau)
        assert matches_decimal(L.l, "0.0753...") is MatchVerdict.PASS
        assert matches_decimal(theta_over_pi(L), "0.5153...") is MatchVerdict.PASS

    def test_real_axis(self):
        tau = ComplexBox(cosh(Interval.exact(1)) * 2, Interval.exact(0))
        L = complex_length_from_trace(tau)
        assert L.l.contains(2)
        assert float(L.l.width()) < 1e-30
        assert L.theta.contains(0)

    def test_elliptic_rejected(self):
        with pytest.raises(DomainError):
            complex_length_from_trace(ComplexBox.exact(Fraction(1, 2), 0))

    def test_round_trip(self):
        rng = random.Random(99)
        for _ in range(1000):
            re = rng.uniform(-4, 4)
            im = rng.choice([-1, 1]) * rng.uniform(0.15, 3)
            tau = ComplexBox.exact(Fraction(round(re * 1000), 1000), Fraction(round(im * 1000), 1000))
            L = complex_length_from_trace(tau)
            back = trace_from_complex_length(L)
            assert back.contains(tau.re.lo_fraction, tau.im.lo_fraction) or (-back).contains(
                tau.re.lo_fraction, tau.im.lo_fraction
            )

    def test_registry_roots_give_positive_angle(self):
        # the Im>0 roots of the three trace-field cubics all land at theta > 0
        for coeffs in ([1, -5, 4, -1], [1, 2, -3, 1], [1, 3, -14, 11]):
            L = complex_length_from_trace(imag_root_box(coeffs))
            assert L.theta.is_positive()

    def test_conjugate_traces_give_conjugate_lengths(self):
        tau = imag_root_box([1, 2, -3, 1])
        L = complex_length_from_trace(tau)
        Lc = complex_length_from_trace(tau.conj())
        assert not L.l.disjoint_from(Lc.l)
        assert not L.theta.disjoint_from(-Lc.theta)


class TestOmega:
    def test_case_a_values(self):
        L = complex_length_from_trace(imag_root_box([1, -5, 4, -1]))
        w1 = omega(L, Interval.exact("0.3"))
        assert matches_decimal(w1, "0.120...") is MatchVerdict.PASS
        w2 = omega(L.times(2), Interval.exact("0.395"))
        assert matches_decimal(w2, "0.13...") is MatchVerdict.PASS

    def test_case_b_values(self):
        L = complex_length_from_trace(imag_root_box([1, 2, -3, 1]))
        assert matches_decimal(omega(L, Interval.exact("0.3")), "0.1205...") is MatchVerdict.PASS
        assert (
            matches_decimal(omega(L.times(2), Interval.exact("0.401")), "0.121...")
            is MatchVerdict.PASS
        )

    def test_case_c_values(self):
        L = complex_length_from_trace(imag_root_box([1, 3, -14, 11]))
        assert matches_decimal(omega(L, Interval.exact("0.3")), "0.19...") is MatchVerdict.PASS
        assert (
            matches_decimal(omega(L.times(4), Interval.exact("0.32")), "0.29...")
            is MatchVerdict.PASS
        )

    def test_degenerate_displacement(self):
        L = ComplexLength(Interval.exact("0.25"), Interval.exact("0.5"))
        w = omega(L, Interval.exact("0.25"))
        assert w.contains(0)

    def test_displacement_below_length_rejected(self):
        L = ComplexLength(Interval.exact("0.25"), Interval.exact("0.5"))
        with pytest.raises(DomainError):
            omega(L, Interval.exact("0.2"))

    def test_monotone_in_displacement(self):
        L = ComplexLength(Interval.exact("0.125"), Interval.exact("1.0"))
        prev = omega(L, Interval.exact("0.125"))
        for d in ["0.2", "0.4", "0.8", "1.6"]:
            cur = omega(L, Interval.exact(d))
            assert cur.hi >= prev.hi and cur.lo >= prev.lo
            prev = cur


class TestTubeRadius:
    def test_short_geodesic(self):
        mu = log3_interval() / 3
        R = tube_radius(Interval.exact("0.01"), mu)
        assert R.exists
        assert R.radius.subset_of(Interval.from_endpoints("0.82", "0.84"))

    def test_no_tube_variant(self):
        out = tube_radius(Interval.exact(1), Interval.exact("0.104"))
        assert not out.exists

    def test_consistency_identity(self):
        mu = log3_interval() / 3
        l = Interval.exact("0.01")
        R = tube_radius(l, mu).radius
        pivot = hypgeom.zagier_displacement_bound(l)
        recon = sinh(R).sqr() * (pivot - 1) + pivot
        assert not recon.disjoint_from(cosh(mu))

    def test_asymptotic_product(self):
        mu = log3_interval() / 3
        l = Interval.exact(Fraction(1, 10**6))
        prod = l * sinh(tube_radius(l, mu).radius).sqr()
        assert prod.subset_of(Interval.from_endpoints("0.0186", "0.0188"))
        prod2 = Interval.exact(Fraction(1, 10**6)) * sinh(
            tube_radius(l, Interval.exact("0.104")).radius
        ).sqr()
        assert matches_decimal(prod2, "0.00149...") is MatchVerdict.PASS


class TestAsymptoticConstant:
    def test_headline_constant(self):
        v = asymptotic_constant(log3_interval() / 3)
        assert matches_decimal(v, "0.01869...") is MatchVerdict.PASS

    def test_small_mu_constant(self):
        v = asymptotic_constant(Interval.exact("0.104"))
        assert matches_decimal(v, "0.00149...") is MatchVerdict.PASS

    def test_quadratic_vanishing(self):
        v = asymptotic_constant(Interval.exact(Fraction(1, 1000)))
        assert v.hi < 1e-6


class TestZagierN:
    def test_angle_zero(self):
        assert zagier_n(Interval.exact("0.1"), Interval.exact(0)) == 1

    def test_angle_pi(self):
        assert zagier_n(Interval.exact("0.1"), pi_interval()) == 2

    def test_angle_two_thirds_pi(self):
        assert zagier_n(Interval.exact("0.1"), pi_interval() * Fraction(2, 3)) == 3

    def test_defining_inequality(self):
        rng = random.Random(4)
        with rigor.precision(64):
            for _ in range(1000):
                l = Interval.exact(Fraction(rng.randint(1, 500), 1000))
                theta = pi_interval() * Fraction(rng.randint(-999, 999), 1000)
                n = zagier_n(l, theta)
                bound = hypgeom.zagier_displacement_bound(l) - 1
                value = cosh(l * n) - rigor.cos(theta * n)
                assert value.certainly_le(bound)

    def test_domain(self):
        with pytest.raises(DomainError):
            zagier_n(Interval.exact(6), Interval.exact(0))


class TestDisplacementBounds:
    def test_oak_swell_case(self):
        v = oak_bound(
            Interval.exact(Fraction(2, 3)),
            Interval.exact("0.3925"),
            Interval.exact("0.07"),
            6,
        )
        assert matches_decimal(v, "2.084...") is MatchVerdict.PASS

    def test_oak_nifty_case(self):
        v = oak_bound(
            Interval.exact(Fraction(2, 3)),
            Interval.exact("0.3"),
            Interval.exact("0.06"),
            5,
        )
        assert matches_decimal(v, "1.29...") is MatchVerdict.PASS

    def test_oak_degenerate_is_phi(self):
        T, mu, h = (
            Interval.exact(Fraction(2, 3)),
            Interval.exact("0.3925"),
            Interval.exact("0.07"),
        )
        a = oak_bound(T, mu, h, 4)
        b = phi(T, mu, h)
        assert a.lo == b.lo and a.hi == b.hi

    def test_phi_first_branch_dominates(self):
        first, second = phi_branches(
            Interval.exact(Fraction(2, 3)),
            Interval.exact("0.3925"),
            Interval.exact("0.07"),
        )
        assert first.certainly_gt(second)

    def test_phi_domain(self):
        one_third = Interval.exact(Fraction(1, 3))
        with pytest.raises(DomainError):
            phi(one_third, Interval.exact("0.3"), Interval.exact("0.3"))
        with pytest.raises(DomainError):
            phi(Interval.exact(3), Interval.exact("0.3"), Interval.exact("0.1"))

    def test_acorn_printed_value(self):
        v = acorn_bound(Interval.exact(Fraction(1, 2)), Interval.exact("0.3925"), 4)
        assert matches_decimal(v, "1.469007...") is MatchVerdict.PASS

    def test_acorn_degenerate_identities(self):
        mu = Interval.exact("0.37")
        v0 = acorn_bound(Interval.exact(0), mu, 2)
        assert not v0.disjoint_from(rigor.acosh(cosh(mu).sqr()))
        v1 = acorn_bound(Interval.exact(1), mu, 2)
        assert v1.contains(Fraction(37, 50))  # arccosh(cosh 2mu) = 2mu

    def test_acorn_domain(self):
        with pytest.raises(DomainError):
            acorn_bound(Interval.exact(2), Interval.exact("0.3"), 4)


class TestMargulisPairValue:
    def test_swell_chain(self):
        v = margulis_pair_value(Interval.exact("0.3925"), Interval.exact("2.09"))
        assert matches_decimal(v, "0.513...") is MatchVerdict.PASS

    def test_second_swell_chain(self):
        v = margulis_pair_value(Interval.exact("0.785"), Interval.exact("1.46901"))
        assert matches_decimal(v, "0.5003...") is MatchVerdict.PASS

    def test_log3_boundary(self):
        l3 = log3_interval()
        v = margulis_pair_value(l3, l3)
        assert v.contains(Fraction(1, 2))
        assert float(v.width()) < 1e-30

    def test_intro_sketch(self):
        v = margulis_pair_value(Interval.exact("0.375"), Interval.exact("2.25"))
        assert matches_decimal(v, "0.502...") is MatchVerdict.PASS

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            margulis_pair_value(Interval.exact(-1), Interval.exact(1))


class TestTraceEllipse:
    def test_unit_trace_excluded(self):
        margin = trace_ellipse_margin(
            ComplexBox.exact(Fraction(1, 2), Fraction(1, 2)), Interval.exact("0.3925")
        )
        assert margin.is_positive()

    def test_vertex_on_ellipse(self):
        mu = Interval.exact("0.3925")
        tau = ComplexBox(cosh(mu * Fraction(1, 2)) * 2, Interval.exact(0))
        margin = trace_ellipse_margin(tau, mu)
        assert margin.contains(0)

    def test_im_bound_printed_values(self):
        b1 = sinh(Interval.exact("0.19625")) * 2
        assert matches_decimal(b1, "0.395...") is MatchVerdict.PASS
        b2 = sinh(Interval.exact("0.15")) * 2
        assert matches_decimal(b2, "0.301...") is MatchVerdict.PASS
