import math

import numpy as np
import pytest

from tribessel.errors import DivergenceError, DomainError
from tribessel.expint import si
from tribessel.oracle import (
    QuadConfig,
    _gk_segment,
    finite_diff_derivative,
    quad_finite,
    quad_semi_infinite,
)
from tribessel.sphfun import _jl_vec
from tribessel.triple import IntegralSpec, integrand

THREE_PI_8 = 1.1780972450961725


def spec000(n, m, a=1.0, b=1.0, u=1.0):
    return IntegralSpec(n=n, m=m, h=0, k=0, l=0, alpha=a, beta=b, mu=u)


# --- config validation -------------------------------------------------------

def test_config_defaults_and_validation():
    cfg = QuadConfig()
    assert cfg.abs_tol == 1e-10 and cfg.rel_tol == 1e-10
    assert cfg.max_depth == 50
    with pytest.raises(DomainError):
        QuadConfig(abs_tol=0.0)
    with pytest.raises(DomainError):
        QuadConfig(rel_tol=-1e-3)
    with pytest.raises(DomainError):
        QuadConfig(max_depth=9)
    with pytest.raises(DomainError):
        QuadConfig(tail_policy="nonsense")


# --- single-segment rule ------------------------------------------------------

def test_rule_exact_on_high_degree_polynomials():
    # the embedded pair is exact through degree 13, the full rule well past it
    for deg in (13, 22):
        val, err = _gk_segment(lambda x: x**deg, 0.0, 1.0)
        assert abs(val - 1.0 / (deg + 1)) < 1e-15
    val, err = _gk_segment(lambda x: x**13, 0.0, 1.0)
    assert err < 1e-15  # embedded difference vanishes at degree 13


def test_rule_error_estimate_nonzero_when_inexact():
    val, err = _gk_segment(lambda x: np.exp(np.sin(9.0 * x)), 0.0, 3.0)
    assert err > 1e-12


# --- quad_finite ---------------------------------------------------------------

def test_finite_elementary_integrals():
    r = quad_finite(lambda x: x, 0.0, 1.0)
    assert abs(r.value - 0.5) < 1e-13
    assert r.converged
    r = quad_finite(np.sin, 0.0, math.pi)
    assert abs(r.value - 2.0) < 1e-12


def test_finite_oscillatory_vs_si():
    f = lambda x: _jl_vec(0, np.asarray(x, dtype=float))
    r = quad_finite(f, 1e-12, 40 * math.pi)
    assert abs(r.value - si(40 * math.pi)) < 1e-9


def test_finite_split_additivity():
    spec = IntegralSpec(n=1, m=0.5, h=1, k=0, l=2,
                        alpha=1.1, beta=0.6, mu=1.9)
    f = integrand(spec)
    cfg = QuadConfig(abs_tol=1e-11, rel_tol=1e-11)
    rng = np.random.default_rng(20)
    a, b = 0.2, 9.0
    whole = quad_finite(f, a, b, cfg).value
    for _ in range(6):
        c = rng.uniform(a + 0.5, b - 0.5)
        parts = quad_finite(f, a, c, cfg).value + quad_finite(f, c, b, cfg).value
        assert abs(parts - whole) <= 2 * cfg.abs_tol


def test_finite_refinement_monotone_toward_reference():
    # halving the tolerance must tighten the guaranteed band around the
    # reference; the realized estimate stays inside its band at every level
    spec = IntegralSpec(n=0, m=0.0, h=0, k=1, l=0,
                        alpha=1.0, beta=2.3, mu=0.8)
    f = integrand(spec)
    ref = quad_finite(f, 0.1, 60.0, QuadConfig(abs_tol=1e-13, rel_tol=1e-13))
    bands, diffs = [], []
    for tol in (1e-4, 5e-5, 2.5e-5, 1.25e-5, 6.25e-6):
        est = quad_finite(f, 0.1, 60.0, QuadConfig(abs_tol=tol, rel_tol=tol))
        diffs.append(abs(est.value - ref.value))
        bands.append(est.err_estimate)
    assert all(b <= a for a, b in zip(bands, bands[1:]))
    assert all(d <= b for d, b in zip(diffs, bands))
    assert diffs[-1] <= diffs[0]


def test_finite_max_depth_flag_not_exception():
    # integrable endpoint singularity starves a depth-10 budget
    f = lambda x: np.asarray(x, dtype=float) ** -0.9
    r = quad_finite(f, 1e-300, 1.0, QuadConfig(max_depth=10))
    assert not r.converged
    assert np.isfinite(r.value)


# --- quad_semi_infinite ---------------------------------------------------------

def test_semi_infinite_sinc_cubed():
    for policy in ("period_summation", "exponential_bound"):
        r = quad_semi_infinite(spec000(0, 0.0),
                               QuadConfig(tail_policy=policy))
        assert abs(r.value - THREE_PI_8) <= 1e-9, policy
        assert r.converged


def test_semi_infinite_tail_policies_agree_when_damped():
    for n in (0, 1.5, 3):
        vals = []
        for policy in ("period_summation", "exponential_bound"):
            r = quad_semi_infinite(spec000(n, 1.0, 1.0, 1.3, 0.7),
                                   QuadConfig(tail_policy=policy))
            vals.append(r.value)
        assert abs(vals[0] - vals[1]) <= 1e-9


def test_semi_infinite_origin_singular_but_integrable():
    r = quad_semi_infinite(spec000(-0.5, 1.0))
    assert np.isfinite(r.value)
    assert r.converged
    # analytic cross-check via closed form is in the triple suite; here
    # just pin the value against a tighter-tolerance rerun
    tight = quad_semi_infinite(spec000(-0.5, 1.0),
                               QuadConfig(abs_tol=1e-12, rel_tol=1e-12))
    assert abs(r.value - tight.value) <= 1e-9


def test_semi_infinite_divergence_preconditions():
    with pytest.raises(DivergenceError):
        quad_semi_infinite(spec000(-1, 1.0))
    with pytest.raises(DivergenceError):
        quad_semi_infinite(spec000(2, 0.0))
    with pytest.raises(DivergenceError):
        quad_semi_infinite(IntegralSpec(n=0, m=0, h=0, k=0, l=0,
                                        alpha=1, beta=1, mu=1,
                                        m_imaginary=True))


def test_semi_infinite_err_estimate_honest():
    # the reported estimate should cover the actual deviation from truth
    r = quad_semi_infinite(spec000(0, 0.0))
    assert abs(r.value - THREE_PI_8) <= 10 * max(r.err_estimate, 1e-15)


# --- finite differences --------------------------------------------------------

def test_finite_diff_derivative():
    assert abs(finite_diff_derivative(lambda x: x * x, 3.0, 1e-3) - 6.0) < 1e-10
    assert abs(finite_diff_derivative(math.sin, 0.0, 1e-3) - 1.0) < 1e-10
