import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import integrate
from scipy.special import beta as beta_fn

from superjack import ensembles as ens
from superjack.ensembles import EnsembleSpec, RatioQuery
from superjack.jack import SuperPoint


def _within(est, target, k=4.0):
    return abs(est.mean - target) <= k * est.std_error


# ---------------------------------------------------------------- constants

@pytest.mark.parametrize("lam1,lam2", [(0, 0), (0.5, 1.5), (2, 0.25)])
def test_selberg_one_variable_is_beta_function(lam1, lam2):
    assert ens.selberg_constant(1, lam1, lam2, 1) == pytest.approx(beta_fn(lam1 + 1, lam2 + 1), rel=1e-13)


@pytest.mark.parametrize("lam", [0.5, 1.0, 1.5])
def test_selberg_two_variables_against_scipy(lam):
    lam1, lam2 = 0.5, 1.0
    f = lambda y, x: (x * y) ** lam1 * ((1 - x) * (1 - y)) ** lam2 * abs(x - y) ** (2 * lam)
    ref, _ = integrate.dblquad(f, 0, 1, 0, 1, epsabs=1e-12)
    assert ens.selberg_constant(2, lam1, lam2, lam) == pytest.approx(ref, rel=1e-7)


@given(st.integers(1, 3), st.sampled_from([0, 0.5, 1, 2.5]), st.sampled_from([0, 0.5, 1.5]),
       st.sampled_from([1, 2, 4]))
@settings(max_examples=20, deadline=None)
def test_selberg_density_is_normalized(N, lam1, lam2, beta):
    total = ens.selberg_density_integral(lambda x: np.ones(x.shape[0]), N, lam1, lam2, beta)
    assert total / ens.selberg_constant(N, lam1, lam2, beta / 2) == pytest.approx(1, abs=1e-9)


def test_selberg_density_odd_beta_route():
    total = ens.selberg_density_integral(lambda x: np.ones(x.shape[0]), 2, 0.5, 0.5, 1)
    assert total == pytest.approx(ens.selberg_constant(2, 0.5, 0.5, 0.5), rel=1e-8)


@pytest.mark.parametrize("beta", [1.0, 2.0, 4.0])
def test_laguerre_and_gaussian_constants_against_scipy(beta):
    lam1 = 0.5
    lag = lambda y, x: (x * y) ** lam1 * math.exp(-beta * (x + y) / 2) * abs(x - y) ** beta
    ref, _ = integrate.dblquad(lag, 0, 60, 0, 60, epsabs=1e-11)
    assert ens.laguerre_constant(lam1, beta, 2) == pytest.approx(ref, rel=1e-6)
    gau = lambda y, x: math.exp(-beta * (x * x + y * y) / 2) * abs(x - y) ** beta
    ref, _ = integrate.dblquad(gau, -12, 12, -12, 12, epsabs=1e-11)
    assert ens.gaussian_constant(beta, 2) == pytest.approx(ref, rel=1e-6)


def test_one_point_constants():
    assert ens.laguerre_constant(2, 2, 1) == pytest.approx(math.gamma(3))
    assert ens.gaussian_constant(2, 1) == pytest.approx(math.sqrt(math.pi))
    assert ens.laguerre_constant(2, 2, 0) == 1.0


@pytest.mark.parametrize("beta", [1.0, 2.0, 4.0])
def test_circular_constant_against_scipy(beta):
    # rotation invariance reduces the two-angle integral to one relative angle
    ref, _ = integrate.quad(lambda th: abs(2 * math.sin(th / 2)) ** beta, -math.pi, math.pi, points=[0],
                            epsabs=1e-13)
    assert ens.circular_constant(beta, 2) == pytest.approx(2 * math.pi * ref, rel=1e-10)
    assert ens.circular_constant(1, 2) == pytest.approx(16 * math.pi, rel=1e-14)


@pytest.mark.parametrize("N,lam1,lam2,lam", [(1, 0.3, 0.4, 1.0), (2, 0.3, 0.45, 0.65), (3, -0.2, 0.6, 0.35),
                                             (2, 0.25, 0.5, 2.0)])
def test_trig_bridge_general_form(N, lam1, lam2, lam):
    morris_side, selberg = ens.trig_bridge(N, lam1, lam2, lam)
    assert abs(morris_side - selberg) < 1e-12 * max(1.0, abs(selberg))


def test_trig_bridge_printed_form_needs_integer_lambda():
    m_int, s_int = ens.trig_bridge(2, 0.3, 0.45, 1.0, form="printed")
    assert abs(m_int - s_int) < 1e-12 * abs(s_int)
    m_half, s_half = ens.trig_bridge(2, 0.3, 0.45, 0.5, form="printed")
    assert abs(m_half - s_half) > 1e-3 * abs(s_half)


@pytest.mark.parametrize("kappa", [(), (1,), (2, 1), (3,), (1, 1, 1)])
@pytest.mark.parametrize("alpha", [Fraction(1, 2), Fraction(1), Fraction(2)])
def test_kadell_integral(kappa, alpha):
    lhs, rhs = ens.kadell_check(kappa, alpha, Fraction(1, 2), Fraction(3, 2), 3)
    assert lhs == pytest.approx(rhs, rel=1e-9)


# ---------------------------------------------------------------- samplers

def test_sampling_is_reproducible():
    spec = EnsembleSpec("jacobi", 3, 2, 0.5, 1.5)
    a = ens.sample_batch(spec, 5, ens.make_rng(11))
    b = ens.sample_batch(spec, 5, ens.make_rng(11))
    c = ens.sample_batch(spec, 5, ens.make_rng(11, stream=1))
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)
    assert ens.sample_ensemble(spec, 4) == ens.sample_ensemble(spec, 4)


@pytest.mark.parametrize("family,beta", [("jacobi", 1), ("jacobi", 2.5), ("laguerre", 1), ("laguerre", 4),
                                         ("hermite", 2), ("circular", 3), ("circular_jacobi", 2)])
def test_sample_support(family, beta):
    x = ens.sample_batch(EnsembleSpec(family, 3, beta, 0.5, 1.0, 0.4), 200, ens.make_rng(2))
    assert x.shape == (200, 3) and np.all(np.isfinite(x))
    if family == "jacobi":
        assert np.all((x > 0) & (x < 1))
    elif family == "laguerre":
        assert np.all(x > 0)
    elif family.startswith("circular"):
        assert np.all(np.abs(x) <= math.pi)


@pytest.mark.parametrize("beta", [1, 2, 4])
def test_jacobi_sampler_product_moment(beta):
    N, lam1, lam2 = 3, 0.5, 1.0
    x = ens.sample_batch(EnsembleSpec("jacobi", N, beta, lam1, lam2), 60000, ens.make_rng(5))
    prod = x.prod(axis=1)
    target = ens.selberg_constant(N, lam1 + 1, lam2, beta / 2) / ens.selberg_constant(N, lam1, lam2, beta / 2)
    assert abs(prod.mean() - target) < 4 * prod.std() / math.sqrt(len(prod))


@pytest.mark.parametrize("beta", [1, 2, 4])
def test_laguerre_sampler_product_moment(beta):
    N, lam1 = 2, 0.5
    x = ens.sample_batch(EnsembleSpec("laguerre", N, beta, lam1), 60000, ens.make_rng(6))
    prod = x.prod(axis=1)
    target = ens.laguerre_constant(lam1 + 1, beta, N) / ens.laguerre_constant(lam1, beta, N)
    assert abs(prod.mean() - target) < 4 * prod.std() / math.sqrt(len(prod))


@pytest.mark.parametrize("beta", [1, 2, 4])
def test_hermite_sampler_second_moment(beta):
    N = 3
    x = ens.sample_batch(EnsembleSpec("hermite", N, beta), 60000, ens.make_rng(7))
    q = (x ** 2).sum(axis=1)
    target = (N + beta * N * (N - 1) / 2) / beta
    assert abs(q.mean() - target) < 4 * q.std() / math.sqrt(len(q))


def test_unitary_circular_trace_moment():
    x = ens.sample_batch(EnsembleSpec("circular", 4, 2), 60000, ens.make_rng(8))
    tr2 = np.abs(np.exp(1j * x).sum(axis=1)) ** 2
    assert abs(tr2.mean() - 1) < 4 * tr2.std() / math.sqrt(len(tr2))


# ------------------------------------------------------- ratio expectations

def test_query_validation():
    with pytest.raises(ValueError):
        ens.mc_ratio_expectation(EnsembleSpec("jacobi", 2, 2), RatioQuery((0.1,), (2.0,)), 10, 0)
    with pytest.raises(ValueError):
        ens.mc_ratio_expectation(EnsembleSpec("laguerre", 2, 2), RatioQuery((0.1,), (0.05,)), 10, 0)
    with pytest.raises(ValueError):
        ens.mc_ratio_expectation(EnsembleSpec("circular", 2, 2), RatioQuery((0.1,), (1.5,)), 10, 0)


@pytest.mark.parametrize("beta,lam1,lam2", [(2, 0.5, 0.5), (1, 1.0, 0.0), (4, 0.0, 1.5)])
def test_jacobi_series_matches_quadrature(beta, lam1, lam2):
    spec = EnsembleSpec("jacobi", 2, beta, lam1, lam2)
    query = RatioQuery((0.2, -0.1), (-0.15,))
    assert ens.jacobi_series_value(spec, query) == pytest.approx(ens.selberg_quadrature(spec, query).real, abs=1e-9)


@pytest.mark.parametrize("beta", [1, 2, 4])
def test_laguerre_series_matches_quadrature(beta):
    lam1 = 0.5
    spec = EnsembleSpec("laguerre", 2, beta, lam1)
    query = RatioQuery((-0.1,), (-0.05,))

    def w(y, x):
        pts = np.array([[x, y]])
        obs = ens.ratio_integrand(pts, query, beta)[0].real
        return obs * (x * y) ** lam1 * math.exp(-beta * (x + y) / 2) * abs(x - y) ** beta

    ref = 2 * integrate.dblquad(w, 0, 90, 0, lambda x: x, epsabs=1e-13)[0]
    assert ens.laguerre_series_value(spec, query) == pytest.approx(ref / ens.laguerre_constant(lam1, beta, 2),
                                                                    abs=1e-8)


@pytest.mark.parametrize("family,beta,query", [
    ("jacobi", 2, RatioQuery((0.2,), (-0.1,))),
    ("jacobi", 1, RatioQuery((0.3, -0.2), (-0.25,))),
    ("laguerre", 2, RatioQuery((-0.1,), (-0.05,))),
    ("laguerre", 1, RatioQuery((-0.1,), (-0.05,))),
])
def test_monte_carlo_agrees_with_series(family, beta, query):
    spec = EnsembleSpec(family, 2, beta, 0.5, 0.5)
    est = ens.mc_ratio_expectation(spec, query, 100000, rng_seed=21)
    series = ens.jacobi_series_value(spec, query) if family == "jacobi" else ens.laguerre_series_value(spec, query)
    assert _within(est, series)


def test_circular_jacobi_series_against_monte_carlo():
    spec = EnsembleSpec("circular_jacobi", 2, 2, b=0.4)
    query = RatioQuery((0.2,), (0.1,))
    est = ens.mc_ratio_expectation(spec, query, 100000, rng_seed=4)
    assert _within(est, ens.circular_jacobi_series_value(spec, query))


def test_estimate_is_reproducible_and_serializable():
    spec = EnsembleSpec("jacobi", 2, 2, 0.5, 0.5)
    query = RatioQuery((0.2,), (-0.1,))
    a = ens.mc_ratio_expectation(spec, query, 5000, rng_seed=3)
    b = ens.mc_ratio_expectation(spec, query, 5000, rng_seed=3)
    assert a.as_dict() == b.as_dict()
    assert set(a.as_dict()) == {"value", "imag", "std_error", "n_samples", "ess", "seed", "spec"}


# ----------------------------------------------------------------- hard edge

@pytest.mark.parametrize("N,beta,a", [(1, 2, 0), (2, 2, 1), (2, 2, 3), (3, 4, 0), (2, 4, 1)])
def test_hard_edge_gap_probability(N, beta, a):
    for s in (0.3, 1.1):
        E, _ = ens.laguerre_hardedge_quantities(N, beta, a, s)
        assert E == pytest.approx(ens.hardedge_quadrature(N, beta, a, s), abs=1e-9)


@pytest.mark.parametrize("s", [0.3, 1.1])
def test_hard_edge_odd_beta_against_adaptive_quadrature(s):
    # the integrand is symmetric, so integrate the smooth ordered triangle y < x and double
    N, beta, a = 2, 1, 2
    w = lambda y, x: (x * y) ** a * math.exp(-beta * (x + y) / 2) * abs(x - y) ** beta
    gap = 2 * integrate.dblquad(w, s, 80, s, lambda x: x, epsabs=1e-13)[0]
    E, _ = ens.laguerre_hardedge_quantities(N, beta, a, s)
    assert E == pytest.approx(gap / ens.laguerre_constant(a, beta, N), abs=1e-8)
    with pytest.raises(ValueError):
        ens.hardedge_quadrature(N, beta, a, s)


@pytest.mark.parametrize("N,beta,a", [(2, 2, 1), (2, 1, 2), (3, 4, 0)])
def test_hard_edge_density_is_gap_derivative(N, beta, a):
    s, h = 0.8, 1e-5
    E_plus, _ = ens.laguerre_hardedge_quantities(N, beta, a, s + h)
    E_minus, _ = ens.laguerre_hardedge_quantities(N, beta, a, s - h)
    _, p = ens.laguerre_hardedge_quantities(N, beta, a, s)
    assert p == pytest.approx(-(E_plus - E_minus) / (2 * h), abs=1e-7)


def test_hard_edge_gap_decreases():
    values = [ens.laguerre_hardedge_quantities(2, 2, 1, s)[0] for s in (0.1, 0.5, 1.0, 2.0, 4.0)]
    assert all(x > y for x, y in zip(values, values[1:]))
    assert values[0] < 1 and values[-1] > 0


def test_hard_edge_requires_integer_exponent():
    with pytest.raises(ValueError):
        ens.laguerre_hardedge_quantities(2, 2, 0.5, 1.0)


# ---------------------------------------------------------- gamma deformation

@pytest.mark.parametrize("gamma", [Fraction(1), Fraction(2), Fraction(1, 2)])
def test_gamma_selberg_one_variable(gamma):
    alpha = Fraction(3, 2)
    res = ens.gamma_selberg_check(alpha, gamma, Fraction(1, 2), Fraction(1, 2), 1,
                                  SuperPoint((Fraction(1, 10),), (Fraction(-1, 20),)))
    assert res["discrepancy"] < 1e-8


def test_gamma_replication_is_exact():
    res = ens.gamma_replication_check(Fraction(3, 2), 2, SuperPoint((Fraction(1, 5),), (Fraction(-1, 7),)))
    assert res["exact"] and not res["mismatches"] and res["checked"] > 0


# ---------------------------------------------------------------- Gaussian limit

def test_gaussian_limit_against_monte_carlo():
    spec = EnsembleSpec("hermite", 2, 2)
    out = ens.gaussian_ratio_vs_limit(spec, RatioQuery((0.3,), (), form="x_minus_t"), n_samples=100000, rng_seed=9)
    assert abs(out["z"]) < 4
