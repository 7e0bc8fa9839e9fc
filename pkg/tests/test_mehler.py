import math

import numpy as np
import pytest

import rdunkl as rd
from rdunkl._errors import ParameterError
from rdunkl.mehler import MehlerWeight, beta_lemma_check, mehler_E, mehler_j
from rdunkl.quadrature import (
    gauss_jacobi_rule,
    gauss_legendre_rule,
    jacobi_moment,
    rule_exactness_residual,
)
from rdunkl.special import gamma_ratio


def test_gauss_legendre_cubic_exact():
    rule = gauss_legendre_rule(2)
    assert abs(rule.integrate(lambda v: v ** 3) - 0.25) < 1e-15


def test_gauss_jacobi_half_weight():
    rule = gauss_jacobi_rule(0.5, 0.0, 16)
    assert abs(rule.integrate(lambda v: np.ones_like(v)) - 2.0 / 3.0) < 1e-14


def test_gauss_jacobi_weight_sum_is_beta():
    for p, q in [(0.3, -0.4), (1.2, 0.0), (-0.5, -0.25)]:
        rule = gauss_jacobi_rule(p, q, 24)
        want = gamma_ratio([q + 1.0, p + 1.0], [p + q + 2.0])
        assert abs(np.sum(rule.weights) - want) / want < 1e-13


@pytest.mark.parametrize("p,q", [(0.0, 0.0), (0.75, -0.5), (-0.3, -0.6)])
def test_rule_exactness_on_monomials(p, q):
    rule = gauss_jacobi_rule(p, q, 12)
    assert rule_exactness_residual(rule, p, q) < 1e-12


def test_gauss_jacobi_rejects_bad_params():
    with pytest.raises(ParameterError):
        gauss_jacobi_rule(-1.0, 0.0, 4)
    with pytest.raises(ParameterError):
        gauss_jacobi_rule(0.0, -1.5, 4)


def test_jacobi_moment_against_quadrature():
    rule = gauss_jacobi_rule(0.4, -0.2, 20)
    for m in (0, 1, 5):
        got = float(np.sum(rule.weights * rule.nodes ** m))
        assert abs(got - jacobi_moment(0.4, -0.2, m)) < 1e-14


def test_beta_lemma_trivial_case():
    rep = beta_lemma_check(1.0, 1.0, 2)
    assert rep.residual < 1e-15  # both sides are exactly 1


def test_beta_lemma_generic_and_sqrt_pi():
    rep = beta_lemma_check(1.3, 0.7, 3, n_nodes=48)
    assert rep.passed and rep.residual < 1e-12
    rep = beta_lemma_check(0.5, 0.5, 2, n_nodes=48)
    # both sides equal pi
    assert rep.residual < 1e-12


def test_mehler_weight_normalization():
    # integrating 1 against the normalized weight returns j_mu(0) = 1
    for mu in [
        rd.IndexVector(2, (0.0, 0.75)),
        rd.IndexVector(3, (0.0, 0.9 - 1 / 3, -2 / 3)),
        rd.IndexVector(3, (0.4, 0.6, 1.1)),
    ]:
        got = mehler_j(mu, 0.0)
        assert abs(got - 1.0) < 1e-10


def test_mehler_weight_removal_and_params():
    mu = rd.IndexVector(3, (0.0, 0.9 - 1 / 3, -2 / 3))  # a = (0, 2.7, 0)
    w = MehlerWeight(mu)
    assert w.included == (1,)
    p, q = w.jacobi_params[0]
    assert abs(p - (0.9 - 1.0)) < 1e-15 and abs(q + 1 / 3) < 1e-15


def test_mehler_weight_rejects_nonintegrable():
    with pytest.raises(ParameterError):
        MehlerWeight(rd.IndexVector(2, (0.0, -0.7)))  # alpha_1 + 1/2 < 0 with a_1 != 0


def test_mehler_j_example_r2():
    # single included dimension with weight (1-u^2)^(alpha-1/2)
    mu = rd.IndexVector(2, (0.0, 0.75))
    got = mehler_j(mu, 1.0, 48)
    want = rd.bessel_j_value(mu, 1.0)
    assert abs(got - want) / (1 + abs(want)) < 1e-10


def test_mehler_j_example_r3():
    mu = rd.IndexVector(3, (0.0, 0.9 - 1 / 3, -2 / 3))
    got = mehler_j(mu, 2.0, 48)
    want = rd.bessel_j_value(mu, 2.0)
    assert abs(got - want) / (1 + abs(want)) < 1e-9


def test_mehler_j_explicit_normalization_r2():
    # c = 2 Gamma(a+1)/(Gamma(a+1/2) Gamma(1/2)) for the one-dimensional case
    alpha = 0.75
    w = MehlerWeight(rd.IndexVector(2, (0.0, alpha)))
    want = 2.0 * math.gamma(alpha + 1.0) / (math.gamma(alpha + 0.5) * math.gamma(0.5))
    assert abs(w.c_norm - want) / want < 1e-14


@pytest.mark.parametrize(
    "mu",
    [
        rd.IndexVector(2, (0.0, 0.6)),
        rd.IndexVector(2, (0.3, 0.8)),
        rd.IndexVector(3, (0.0, 0.9 - 1 / 3, -2 / 3)),
        rd.IndexVector(3, (0.2, 0.5, 1.0)),
    ],
)
@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
def test_mehler_j_matches_series_grid(mu, x):
    got = mehler_j(mu, x, 48)
    want = rd.bessel_j_value(mu, x)
    assert abs(got - want) / (1 + abs(want)) < 1e-9


@pytest.mark.parametrize(
    "mu",
    [
        rd.IndexVector(2, (0.0, 0.6)),
        rd.IndexVector(3, (0.0, 0.9 - 1 / 3, -2 / 3)),
    ],
)
@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
def test_mehler_E_matches_series_grid(mu, x):
    got = mehler_E(mu, x, 48)
    want = rd.evaluate(rd.dunkl_kernel_series(mu, 1.0, 70), x)
    assert abs(got - want) / (1 + abs(want)) < 1e-8


def test_mehler_E_degenerate_collapses_to_exponential():
    for r in (2, 3):
        c = rd.CyclicStructure(r)
        mu = rd.IndexVector(r, tuple(-k / r for k in range(r)))
        got = mehler_E(mu, 1.3, 32)
        assert abs(got - np.exp(c.theta * 1.3)) < 1e-10


def test_mehler_E_classical_form_r2():
    # the collapsed integral (1/sqrt(pi)) (Gamma(a+1)/Gamma(a+1/2))
    # * int_{-1}^{1} e^{ixu} (1+u)(1-u^2)^(a-1/2) du
    alpha, x = 0.6, 1.5
    mu = rd.IndexVector(2, (0.0, alpha))
    rule = gauss_jacobi_rule(alpha - 0.5, 0.0, 400)  # on [0,1], singular end at u=1
    # map to [-1, 1]: u = 2v - 1, (1-u^2)^(a-1/2) = (2-2v)^(a-1/2)(2v)^(a-1/2)
    # simpler: split [-1,1] symmetric via two singular ends; use substitution
    # u = 1 - 2s with Jacobi weight in s at both ends handled by p = q = alpha - 1/2
    from scipy.special import roots_jacobi

    xs, ws = roots_jacobi(200, alpha - 0.5, alpha - 0.5)
    integrand = np.exp(1j * x * xs) * (1.0 + xs)
    val = np.sum(ws * integrand)
    const = (1.0 / math.sqrt(math.pi)) * math.gamma(alpha + 1.0) / math.gamma(alpha + 0.5)
    want = const * val
    got = mehler_E(mu, x, 48)
    assert abs(got - want) / (1 + abs(want)) < 1e-9


def test_mehler_E_example5_four_term_integrand():
    # r=3 kernel against the explicit four-term single-integral form; the
    # weight splits as (1-u^3)^(v-1) = (1-u)^(v-1) (1+u+u^2)^(v-1), keeping
    # the integrand analytic against a plain Jacobi rule in u
    v, x = 0.9, 1.0
    mu = rd.IndexVector(3, (0.0, v - 1 / 3, -2 / 3))
    c = rd.CyclicStructure(3)
    theta, omega = c.theta, c.omega
    rule = gauss_jacobi_rule(v - 1.0, 0.0, 80)
    u = rule.nodes
    w = rule.weights * (1.0 + u + u ** 2) ** (v - 1.0)

    def T(k, fn):
        # T_k of a function of x, evaluated at the outer x
        return sum(omega ** (n * k) * fn(omega ** n * x) for n in range(3)) / 3.0

    c_v = 3.0 * math.gamma(v + 2 / 3) / (math.gamma(v) * math.gamma(2 / 3))
    total = 0.0 + 0.0j
    for uu, ww in zip(u, w):
        term = (
            T(0, lambda z: (1.0 / z) * (z * uu) * np.exp(theta * z * uu))
            + T(1, lambda z: (1.0 / z ** 2) * (z * uu) ** 2 * np.exp(theta * z * uu))
            + T(2, lambda z: (1.0 / z ** 3) * (z * uu) ** 3 * np.exp(theta * z * uu))
            + (3.0 * v / theta) * T(2, lambda z: (1.0 / z ** 3) * (z * uu) ** 2 * np.exp(theta * z * uu))
        )
        total += ww * term
    want = c_v * total
    got = mehler_E(mu, x, 64)
    assert abs(got - want) / (1 + abs(want)) < 1e-10


@pytest.mark.parametrize("mu", [rd.IndexVector(2, (0.0, 0.6)), rd.IndexVector(3, (0.2, 0.5, 1.0))])
def test_node_doubling_convergence_trend(mu):
    # doubling the per-dimension node count never inflates the residual by
    # more than 10x across three doublings
    x = 1.7
    want = rd.bessel_j_value(mu, x)
    prev = None
    for n in (6, 12, 24, 48):
        resid = abs(mehler_j(mu, x, n) - want) / (1 + abs(want))
        if prev is not None:
            # the 5e-14 floor keeps roundoff jitter from tripping the trend
            assert resid < 10.0 * prev + 5e-14
        prev = resid


def test_removed_dimension_equivalence():
    # indices with a_i = 0 drop out: the reduced representation still hits
    # the full series
    mu = rd.IndexVector(3, (0.0, 0.9 - 1 / 3, -2 / 3))  # two removed dims
    assert len(MehlerWeight(mu).included) == 1
    for x in (0.5, 2.0):
        got = mehler_j(mu, x, 48)
        want = rd.bessel_j_value(mu, x)
        assert abs(got - want) / (1 + abs(want)) < 1e-9
