import math

import numpy as np
import pytest

from lorentzgas import quadrature
from lorentzgas.quadrature import IntegrationSpec, cdf_table, integrate


def test_constant():
    res = integrate(lambda x: np.ones_like(x), IntegrationSpec(0.0, 1.0))
    assert abs(res.value - 1.0) <= 1e-14
    assert res.converged


def test_polynomial_exact():
    res = integrate(lambda x: x ** 2, IntegrationSpec(0.0, 3.0))
    assert abs(res.value - 9.0) <= 1e-12
    assert res.converged


def test_breakpoint_kink():
    # |x - 0.3| has a kink; with the breakpoint supplied the panels are
    # polynomial and the rule is exact.
    f = lambda x: np.abs(x - 0.3)
    exact = 0.5 * (0.3 ** 2 + 0.7 ** 2)
    res = integrate(f, IntegrationSpec(0.0, 1.0, breakpoints=(0.3,)))
    assert abs(res.value - exact) <= 1e-13


def test_phi0_inner_panel_vs_dense_trapezoid():
    from lorentzgas import kernels

    f = lambda x: kernels.phi0_inner(np.maximum(x, 1e-12), 0.5)
    spec = IntegrationSpec(0.0, 2.0, breakpoints=(0.5, 1.0 / 1.5, 2.0 - 1e-15))
    res = integrate(f, spec)
    xs = np.linspace(1e-9, 2.0, 1_000_001)
    dense = np.trapezoid(kernels.phi0_inner(xs, 0.5), xs)
    assert abs(res.value - dense) <= 1e-7


def test_linearity():
    f = lambda x: np.sin(x)
    g = lambda x: x ** 3
    spec = IntegrationSpec(0.0, 2.0, abs_tol=1e-11)
    lhs = integrate(lambda x: 2.0 * f(x) + 3.0 * g(x), spec).value
    rhs = 2.0 * integrate(f, spec).value + 3.0 * integrate(g, spec).value
    assert abs(lhs - rhs) <= 2e-11


def test_panel_additivity():
    f = lambda x: np.exp(-x) * np.sin(3 * x)
    whole = integrate(f, IntegrationSpec(0.0, 4.0, abs_tol=1e-11)).value
    split = integrate(f, IntegrationSpec(0.0, 4.0, breakpoints=(1.234567,),
                                         abs_tol=1e-11)).value
    assert abs(whole - split) <= 2e-11


@pytest.mark.parametrize("f,a,b,exact", [
    (lambda x: np.exp(x), 0.0, 1.0, math.e - 1.0),
    (lambda x: np.sin(x), 0.0, math.pi, 2.0),
    (lambda x: 1.0 / (1.0 + x ** 2), 0.0, 1.0, math.pi / 4.0),
    (lambda x: np.sqrt(np.abs(x)), 0.0, 1.0, 2.0 / 3.0),
    (lambda x: np.log(np.maximum(x, 1e-300)), 0.0, 1.0, -1.0),
    (lambda x: x ** 7 - 3 * x ** 2, -1.0, 2.0, (2 ** 8 - 1) / 8.0 - (8 + 1)),
    (lambda x: np.cos(10 * x), 0.0, 2.0, math.sin(20.0) / 10.0),
    (lambda x: np.exp(-x ** 2), -3.0, 3.0, math.sqrt(math.pi) * math.erf(3.0)),
    (lambda x: 1.0 / np.sqrt(np.maximum(x, 1e-300)), 0.0, 1.0, 2.0),
    (lambda x: np.abs(x) ** 1.5, -1.0, 1.0, 0.8),
])
def test_error_estimate_bounds_true_error(f, a, b, exact):
    res = integrate(f, IntegrationSpec(a, b, abs_tol=1e-9))
    assert abs(res.value - exact) <= max(res.error, 1e-9) * 5 + 1e-12


def test_nonfinite_sample_raises():
    with pytest.raises(ValueError):
        integrate(lambda x: 1.0 / (x - 0.5), IntegrationSpec(0.0, 1.0))


def test_tolerance_not_met_flag():
    # A needle the rule cannot resolve within 3 bisections.
    f = lambda x: np.where(np.abs(x - 0.37218) < 1e-6, 1e6, 0.0)
    res = integrate(f, IntegrationSpec(0.0, 1.0, abs_tol=1e-12, max_depth=3))
    assert not res.converged


def test_deterministic_repeat():
    f = lambda x: np.sin(x * 17.3) / (1.1 + np.cos(x))
    r1 = integrate(f, IntegrationSpec(0.0, 5.0, breakpoints=(1.0, 2.5)))
    r2 = integrate(f, IntegrationSpec(0.0, 5.0, breakpoints=(1.0, 2.5)))
    assert r1.value == r2.value


def test_cdf_table_constant_pdf():
    table = cdf_table(lambda x: np.ones_like(x), 1.0, 11)
    assert abs(table.cdf(0.5) - 0.5) <= 1e-12
    assert abs(table.total_mass - 1.0) <= 1e-12


def test_cdf_table_inverse_roundtrip():
    table = cdf_table(lambda x: 3.0 * x ** 2, 1.0, 201)
    rng = np.random.default_rng(5)
    xs = rng.uniform(0.05, 0.95, 50)
    back = table.inverse(table.cdf(xs))
    assert np.max(np.abs(back - xs)) <= 1.0 / 200


def test_cdf_table_fpl_generic_mass():
    from lorentzgas import kernels

    # Support truncated where the remaining mass is far below 1e-6.
    table = cdf_table(lambda x: kernels.fpl_generic(max(x, 1e-12)), 2.0, 257,
                      breakpoints=(0.5, 1.0))
    expected = 1.0 - kernels.fpl_generic_tail(2.0)
    assert abs(table.total_mass - expected) <= 1e-6


def test_cdf_table_zero_mass_raises():
    with pytest.raises(ValueError):
        cdf_table(lambda x: np.zeros_like(x), 1.0, 11)
