import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from clusterising import DomainError, FitError, beta_exponent_fit, correlator_y, staggered_my, string_order_Oz, szego_sum
from clusterising.order_params import toeplitz_my_squared, toeplitz_string_order


def test_my_examples():
    assert staggered_my(2.0) == pytest.approx(0.75 ** 0.375, abs=1e-15)
    assert staggered_my(2.0) == pytest.approx(0.897735, abs=1e-6)
    assert staggered_my(0.5) == 0.0
    assert staggered_my(math.inf) == 1.0
    assert staggered_my(1e8) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(DomainError):
        staggered_my(1.0)


def test_oz_examples():
    assert string_order_Oz(0.0) == 1.0
    assert string_order_Oz(0.5) == pytest.approx(0.75 ** 0.75, abs=1e-12)
    assert string_order_Oz(0.5) == pytest.approx(0.80593, abs=1e-5)
    assert string_order_Oz(2.0) == 0.0
    with pytest.raises(DomainError):
        string_order_Oz(1.0)


@given(st.floats(0.0, 0.999) | st.floats(1.001, 100.0))
def test_oz_is_squared_dual_my(lam):
    dual = math.inf if lam == 0 else 1 / lam
    assert string_order_Oz(lam) == staggered_my(dual) ** 2
    if lam < 1:
        assert string_order_Oz(lam) == pytest.approx((1 - lam * lam) ** 0.75, rel=1e-12)


def test_szego_coefficients():
    d = szego_sum(2.0)
    assert d.g_coefficient(3) == pytest.approx(0.25, abs=1e-15)
    assert d.g_coefficient(-3) == -d.g_coefficient(3)
    assert d.g_coefficient(4) == 0.0 and d.g_coefficient(5) == 0.0
    assert d.mu == -1


@given(st.floats(1.01, 50.0))
def test_szego_sum_closed_form(lam):
    # the series sums to +(3/4) log(1 - alpha^2); exp of it is m_y^2
    d = szego_sum(lam)
    alpha = 1 / lam
    assert d.sum_nggn == pytest.approx(0.75 * math.log1p(-alpha * alpha), abs=1e-12 + d.tail_bound)
    assert d.limit == pytest.approx(staggered_my(lam) ** 2, rel=1e-12 + d.tail_bound)


def test_szego_value_at_half():
    d = szego_sum(2.0)
    assert d.sum_nggn == pytest.approx(-0.21576155433883568, abs=1e-12)
    assert abs(d.sum_nggn) == pytest.approx(-0.75 * math.log(0.75), abs=1e-12)
    assert d.tail_bound < 1e-50


def test_szego_disordered_branch():
    d = szego_sum(0.5)
    assert d.sum_nggn == -math.inf and d.limit == 0.0
    with pytest.raises(DomainError):
        szego_sum(2.0, n_max=2)


def test_szego_convergence_in_r():
    target = staggered_my(2.0) ** 2
    errs = [abs((-1) ** r * correlator_y(r, 2.0) - target) for r in (12, 24, 36, 48)]
    assert np.all(np.diff(errs) < 0)
    assert errs[-1] < 1e-3
    assert abs((-1) ** 36 * correlator_y(36, 2.0) - target) < 1e-3


def test_staggered_sign_is_single_at_large_r():
    vals = [(-1) ** r * correlator_y(r, 1.5) for r in range(10, 40)]
    assert all(v > 0 for v in vals)


@pytest.mark.parametrize("lam", [0.3, 0.6])
def test_dual_toeplitz_string_order(lam):
    assert toeplitz_string_order(lam) == pytest.approx(string_order_Oz(lam), abs=1e-3)


def test_toeplitz_my_extrapolation():
    assert toeplitz_my_squared(2.0) == pytest.approx(0.75 ** 0.75, abs=1e-3)
    assert toeplitz_my_squared(2.0, extrapolate=False) == pytest.approx(correlator_y(48, 2.0))


def test_exponent_fits_closed_form():
    above = beta_exponent_fit("above")
    below = beta_exponent_fit("below")
    assert above.exponent == pytest.approx(0.375, abs=0.01) and above.n_points >= 8
    assert below.exponent == pytest.approx(0.75, abs=0.01)
    assert above.stderr < 0.01 and below.stderr < 0.01


def test_exponent_fit_toeplitz_route():
    assert beta_exponent_fit("above", source="toeplitz").exponent == pytest.approx(0.375, abs=0.02)
    assert beta_exponent_fit("below", source="toeplitz").exponent == pytest.approx(0.75, abs=0.02)


def test_exponent_fit_errors():
    with pytest.raises(FitError):
        beta_exponent_fit("above", n_points=5)
    with pytest.raises(DomainError):
        beta_exponent_fit("above", window=(0.9, 1.1))
    with pytest.raises(DomainError):
        beta_exponent_fit("sideways")
