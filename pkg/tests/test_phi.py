import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import richardson_second
from zbhyp.errors import DegenerateParameterError, DomainError
from zbhyp.phi import (
    ZbParams,
    aux_eval,
    c_threshold,
    delta_at_zero,
    f_ratio,
    f_second_derivative,
    h_at_zero,
    phi,
    phi_limit_at_one,
    phi_pm_at_zero,
    phi_plus_extended,
    phi_second_deriv0,
    phi_second_derivative,
    psi_big,
    psi_factored,
    s_poly,
)
from zbhyp.special import ramanujan_R


@st.composite
def zb_pairs(draw):
    a = draw(st.floats(0.05, 0.95))
    b = draw(st.floats(0.05, 1.0 - a))
    return ZbParams(a, b)


def test_params_validation():
    with pytest.raises(DomainError):
        ZbParams(-0.1, 0.5)
    p = ZbParams(0.0, 0.5)
    assert p.degenerate and p.zero_balanced_theorem_domain
    assert not ZbParams(0.8, 0.8).zero_balanced_theorem_domain
    with pytest.raises(DegenerateParameterError):
        aux_eval(p, 0.3)
    with pytest.raises(DegenerateParameterError):
        c_threshold(p)


def test_degenerate_phi():
    assert phi((0.0, 0.5), 2.0, 0.3) == pytest.approx(2.0 - math.log(0.7))
    assert phi_second_derivative((0.0, 0.5), 2.0, 0.3) == pytest.approx(1 / 0.49)


def test_aux_at_zero_half_half():
    aux = aux_eval((0.5, 0.5), 0.0)
    assert aux.h == pytest.approx(9 / 32)
    assert aux.g == pytest.approx(-1.5)
    assert aux.delta == pytest.approx(0.0, abs=1e-15)
    for v in (aux.omega_minus, aux.omega_plus, aux.phi_minus, aux.phi_plus):
        assert v == pytest.approx(8 / 3, rel=1e-12)


@given(zb_pairs())
def test_closed_forms_at_zero(p):
    aux = aux_eval(p, 0.0)
    a, b = p.a, p.b
    assert aux.h == pytest.approx(a * b * (a * b + a + b + 1) / ((a + b) * (a + b + 1)), rel=1e-12)
    assert aux.h == pytest.approx(h_at_zero(p), rel=1e-12)
    assert aux.delta == pytest.approx(delta_at_zero(p), rel=1e-9, abs=1e-12)
    pm, pp = phi_pm_at_zero(p)
    assert aux.phi_minus == pytest.approx(pm, rel=1e-9)
    assert aux.phi_plus == pytest.approx(pp, rel=1e-9)


@given(zb_pairs(), st.floats(0.0, 0.999))
def test_root_identity_and_order(p, x):
    aux = aux_eval(p, x)
    assert aux.h > 0 and aux.g < 0
    for w in (aux.omega_minus, aux.omega_plus):
        resid = aux.h * w * w + aux.g * w + 2 * aux.F
        scale = aux.h * w * w + abs(aux.g * w) + 2 * aux.F
        assert abs(resid) <= 1e-9 * scale
    assert aux.omega_minus <= aux.omega_plus * (1 + 1e-12)
    assert aux.phi_plus == pytest.approx(math.log1p(-x) + aux.omega_plus, abs=1e-12)


@given(zb_pairs())
def test_h_and_delta_increasing(p):
    xs = np.linspace(0.0, 0.999, 400)
    aux = aux_eval(p, xs)
    assert np.all(np.diff(aux.h) > 0)
    assert np.all(np.diff(aux.delta) > 0)


def test_h_limit_is_inverse_beta():
    from zbhyp.special import beta
    p = ZbParams(0.3, 0.5)
    assert aux_eval(p, 1 - 1e-7).h == pytest.approx(1 / beta(0.3, 0.5), rel=1e-4)


@given(zb_pairs(), st.floats(0.5, 6.0), st.floats(0.01, 0.99))
def test_phi_f_reciprocal(p, c, x):
    assert phi(p, c, x) * f_ratio(p, c, x) == pytest.approx(1.0, rel=1e-14)


def test_phi_endpoints():
    p = ZbParams(0.5, 0.5)
    assert phi(p, 3.0, 1e-12) == pytest.approx(3.0, rel=1e-10)
    assert f_ratio(p, 3.0, 0.0) == pytest.approx(1 / 3)
    assert phi_limit_at_one(p) == pytest.approx(math.pi)
    # the approach to B(a,b) is logarithmically slow
    # phi - B ~ B (c - R) / (R - log(1-x))
    gap = math.pi * (3.0 - math.log(16)) / (math.log(16) - math.log(1e-14))
    assert phi(p, 3.0, 1 - 1e-14) - math.pi == pytest.approx(gap, rel=1e-2)
    with pytest.raises(DomainError):
        phi(p, 3.0, 1.0)
    with pytest.raises(DomainError):
        f_ratio(p, -1.0, 0.5)


def test_phi_plus_extended():
    p = ZbParams(0.5, 0.5)
    assert phi_plus_extended(p, 1.0) == ramanujan_R(0.5, 0.5)
    assert phi_plus_extended(p, 0.0) == pytest.approx(8 / 3)
    assert abs(phi_plus_extended(p, 0.999999) - math.log(16)) < 1e-3
    with pytest.raises(DomainError):
        phi_plus_extended(p, 1.1)


def test_c_threshold_values():
    assert c_threshold((0.5, 0.5)) == 16 / 5
    assert c_threshold((0.3, 0.6)) == pytest.approx(c_threshold((0.6, 0.3)), rel=1e-15)
    for a in np.arange(0.1, 0.95, 0.1):
        kendall = 2 * (1 - 2 * a + 2 * a * a) / (a * (1 - a) * (2 - 3 * a + 3 * a * a))
        assert abs(c_threshold((a, 1 - a)) - kendall) <= 1e-12 * max(1, kendall)


@given(zb_pairs())
def test_second_derivative_at_zero_root(p):
    cab = c_threshold(p)
    assert abs(phi_second_deriv0(p, cab)) <= 1e-12 * max(1.0, cab)
    assert phi_second_deriv0(p, cab - 0.1) > 0 > phi_second_deriv0(p, cab + 0.1)


def test_second_derivative_at_zero_vs_finite_difference():
    p = ZbParams(0.5, 0.5)
    fd = richardson_second(lambda t: phi(p, 3.0, t), 1e-3, 5e-4)
    assert math.copysign(1, fd) == math.copysign(1, phi_second_deriv0(p, 3.0))
    assert phi_second_deriv0(p, 16 / 5) == pytest.approx(0.0, abs=1e-15)
    # analytic phi'' at 0 matches the closed form
    assert phi_second_derivative(p, 3.0, 0.0) == pytest.approx(phi_second_deriv0(p, 3.0), rel=1e-12)


@given(zb_pairs(), st.floats(0.5, 6.0), st.floats(0.05, 0.95))
def test_phi_second_derivative_vs_finite_difference(p, c, x):
    fd = richardson_second(lambda t: phi(p, c, t), x, 1e-3)
    an = phi_second_derivative(p, c, x)
    assert an == pytest.approx(fd, rel=1e-5, abs=1e-6)


@given(zb_pairs(), st.floats(0.5, 6.0), st.floats(0.0, 0.99))
def test_psi_factorization(p, c, x):
    big = psi_big(p, c, x)
    fac = psi_factored(p, c, x)
    aux = aux_eval(p, x)
    u = c - math.log1p(-x)
    scale = aux.h * u * u + abs(aux.g * u) + 2 * aux.F
    assert abs(big - fac) <= 1e-9 * scale


def test_psi_vanishes_at_root():
    p = ZbParams(0.3, 0.5)
    c = float(aux_eval(p, 0.4).phi_plus)
    aux = aux_eval(p, 0.4)
    u = c - math.log1p(-0.4)
    assert abs(psi_big(p, c, 0.4)) <= 1e-9 * (aux.h * u * u)


def test_f_second_derivative_vs_finite_difference():
    p = ZbParams(0.5, 0.5)
    fd = richardson_second(lambda t: f_ratio(p, 3.0, t), 0.4, 1e-4)
    assert f_second_derivative(p, 3.0, 0.4) == pytest.approx(fd, rel=1e-5)


def test_s_poly():
    p = ZbParams(0.5, 0.5)
    assert s_poly(p, 1.0) > s_poly(p, 2.0)
    assert s_poly(p, 16 / 5) < 0
    assert s_poly((1e-9, 0.5), 3.0) == pytest.approx(1.0, abs=1e-6)
    q = ZbParams(0.3, 0.5)
    cab = c_threshold(q)
    assert all(s_poly(q, c) < 0 for c in (cab, cab + 1, cab + 10))


@given(zb_pairs())
def test_four_ab_bound(p):
    assert 4 * p.a * p.b <= p.a + p.b


@given(zb_pairs())
def test_a_product_decreasing(p):
    from zbhyp.phi import a_product
    xs = np.linspace(0.0, 0.999, 300)
    assert np.all(np.diff(a_product(p, xs)) < 0)
