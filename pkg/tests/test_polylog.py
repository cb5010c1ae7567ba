import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetacasimir import (
    ConvergenceError,
    DomainError,
    PoleError,
    polylog,
    polylog_neg_int,
    polylog_series,
    riemann_zeta,
    series_domain,
)


def brute_sum(s, z, n):
    ell = np.arange(1, n + 1, dtype=float)
    return complex(np.sum(np.exp(ell * np.log(complex(z)) - complex(s) * np.log(ell))))


class TestSeriesDomain:
    def test_inside_disk_any_order(self):
        assert series_domain(0.0, 0.5)
        assert series_domain(-17.3 + 4j, 0.999)

    def test_unit_circle_needs_positive_real_order(self):
        assert series_domain(0.5, -1.0)
        assert not series_domain(-0.5, -1.0)
        assert series_domain(0.1, cmath.exp(2j))

    def test_z_equal_one_needs_order_above_one(self):
        assert not series_domain(1.0, 1.0)
        assert series_domain(1.5, 1.0)

    def test_outside_disk_never(self):
        assert not series_domain(100.0, 1.5)


class TestSeries:
    def test_basel_point(self):
        # independent oracle: direct partial sum with integral tail estimate
        n = 2_000_000
        expected = brute_sum(2, 1, n) + 1.0 / n  # tail ~ 1/n
        val = polylog_series(2.0, 1.0, tol=1e-6)
        assert val.real == pytest.approx(expected.real, abs=2e-6)
        assert val.real == pytest.approx(math.pi**2 / 6.0, abs=2e-6)

    def test_log_two_point(self):
        expected = brute_sum(1, 0.5, 200)
        val = polylog_series(1.0, 0.5, tol=1e-12)
        assert val == pytest.approx(expected, rel=1e-12)
        assert val.real == pytest.approx(math.log(2.0), rel=1e-12)

    def test_zero_argument(self):
        assert polylog_series(-7.3 + 2j, 0.0) == 0.0

    def test_divergent_point_raises(self):
        with pytest.raises(DomainError):
            polylog_series(-1.0, -1.0)

    def test_uncertifiable_tolerance_raises(self):
        with pytest.raises(ConvergenceError):
            polylog_series(0.5, -1.0, tol=1e-8)


class TestNegativeIntegerClosedForm:
    def test_landmark_point_minus_one(self):
        assert polylog_neg_int(3, -1.0) == pytest.approx(0.125, rel=1e-14)

    def test_geometric_case(self):
        assert polylog_neg_int(0, 0.5) == pytest.approx(1.0, rel=1e-14)

    def test_imaginary_argument(self):
        # z(z^2+4z+1)/(z-1)^4 at z=i equals 1
        assert polylog_neg_int(3, 1j) == pytest.approx(1.0 + 0.0j, abs=1e-14)

    def test_pole_at_one(self):
        with pytest.raises(PoleError):
            polylog_neg_int(3, 1.0)

    def test_matches_series_inside_disk(self):
        for n in (1, 2, 3, 5):
            for z in (0.4, -0.7, 0.3 + 0.4j):
                expected = polylog_series(-n, z, tol=1e-13)
                assert polylog_neg_int(n, z) == pytest.approx(expected, rel=1e-10)

    @settings(max_examples=60, deadline=None)
    @given(
        n=st.integers(min_value=0, max_value=6),
        re=st.floats(-0.85, 0.85),
        im=st.floats(-0.5, 0.5),
    )
    def test_derivative_recurrence(self, n, re, im):
        # Li_{-n-1}(z) = z d/dz Li_{-n}(z), by central differences
        z = complex(re, im)
        if abs(z - 1.0) < 0.05 or abs(z) < 1e-3:
            return
        h = 1e-6
        deriv = (polylog_neg_int(n, z + h) - polylog_neg_int(n, z - h)) / (2.0 * h)
        lhs = polylog_neg_int(n + 1, z)
        assert lhs == pytest.approx(z * deriv, rel=1e-5)


class TestDispatcher:
    def test_zeta_minus_three(self):
        assert polylog(-3.0, 1.0).real == pytest.approx(1.0 / 120.0, abs=1e-10)

    def test_zero(self):
        assert polylog(2.0, 0.0) == 0.0

    def test_discontinuity_scale_near_one(self):
        # leading term 6/(z-1)^4 at z = 1 - 1e-3
        z = 1.0 - 1e-3
        val = polylog(-3.0, z)
        assert val.real == pytest.approx(6.0 / (z - 1.0) ** 4, rel=1e-2)
        assert abs(val) > 5e12

    def test_refuses_tiny_neighborhood_of_one(self):
        with pytest.raises(PoleError):
            polylog(-3.0, 1.0 - 1e-13)

    def test_harmonic_pole(self):
        with pytest.raises(PoleError):
            polylog(1.0, 1.0)

    def test_outside_disk(self):
        with pytest.raises(DomainError):
            polylog(2.0, 1.2)

    def test_positive_integer_order_limit_route(self):
        # contour prefactor poles at s = 2; the limit route must recover
        # the series value
        expected = polylog_series(2.0, 0.5, tol=1e-13)
        val = polylog(2.0, -0.5)
        assert val == pytest.approx(polylog_series(2.0, -0.5, tol=1e-13), rel=1e-9)
        assert polylog(2.0, 0.5) == pytest.approx(expected, rel=1e-9)


class TestRiemannZeta:
    def test_negative_odd(self):
        assert riemann_zeta(-3.0).real == pytest.approx(1.0 / 120.0, abs=1e-10)

    def test_even_values_against_brute_force(self):
        n = 2_000_000
        z2 = brute_sum(2, 1, n).real + 1.0 / n
        assert riemann_zeta(2.0).real == pytest.approx(z2, abs=1e-6)
        z4 = brute_sum(4, 1, 20_000).real + 20_000.0**-3 / 3.0
        assert riemann_zeta(4.0).real == pytest.approx(z4, rel=1e-10)
        assert riemann_zeta(4.0).real == pytest.approx(math.pi**4 / 90.0, rel=1e-9)

    def test_pole(self):
        with pytest.raises(PoleError):
            riemann_zeta(1.0)
