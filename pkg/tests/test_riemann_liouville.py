import math

import numpy as np
import pytest
from scipy.integrate import quad

import rdunkl as rd
from rdunkl._errors import DomainError, ParameterError
from rdunkl.riemann_liouville import (
    apply_R_adjoint,
    apply_R_inverse_derivative_form,
    apply_R_inverse_series,
    apply_R_quadrature,
    apply_R_series,
    composition_law_check,
    l_coefficient,
    product_factorization_check,
)
from rdunkl.series import LaurentSeries, monomial


def test_l_coefficient_elementary():
    assert abs(l_coefficient(0, 1.0, 2) - 1.0) < 1e-15
    assert abs(l_coefficient(2, 1.0, 2) - 1.0 / 3.0) < 1e-15  # int_0^1 t^2 dt


def test_l_coefficient_quadrature_cross_check():
    # r=3, alpha=0.5, n=1 against direct numerical integration
    got = l_coefficient(1, 0.5, 3)
    want, _ = quad(lambda t: t * (1 - t ** 3) ** (-0.5), 0, 1, epsabs=1e-14)
    assert abs(got - want) < 1e-12


def test_apply_R_series_and_principal_rejection():
    f = monomial(2, n_max=5)
    out = apply_R_series(1.0, f, 2)
    assert abs(out[2] - 1.0 / 3.0) < 1e-15
    with pytest.raises(DomainError):
        apply_R_series(1.0, monomial(-1), 2)


def test_apply_R_quadrature_constant_and_monomials():
    # g = 1 returns (1/r) B(1/r, alpha)
    alpha, r = 0.8, 3
    got = apply_R_quadrature(alpha, lambda z: np.ones_like(z), 1.0, r)
    want = (1.0 / r) * math.gamma(1.0 / r) * math.gamma(alpha) / math.gamma(1.0 / r + alpha)
    assert abs(got - want) < 1e-13
    for n in range(0, 8):
        got = apply_R_quadrature(alpha, lambda z, n=n: z ** n, 1.3, r)
        want = l_coefficient(n, alpha, r) * 1.3 ** n
        assert abs(got - want) / abs(want) < 1e-12


def test_apply_R_quadrature_cosine():
    # alpha = 1, r = 2: int_0^1 cos(pi t / 2) dt = 2/pi
    got = apply_R_quadrature(1.0, np.cos, np.pi / 2.0, 2)
    assert abs(got - 2.0 / np.pi) < 1e-12


def test_inverse_series_round_trip_and_explicit_factor():
    rng = np.random.default_rng(3)
    f = LaurentSeries(0, rng.standard_normal(25) + 1j * rng.standard_normal(25))
    for order, r in [(0.5, 2), (1.5, 2), (2.3, 3)]:
        back = apply_R_inverse_series(order, apply_R_series(order, f, r), r)
        assert rd.series_residual(back, f) < 1e-13
    # r=2, order=1.5: the x^2 coefficient divides by (1/2)G(3/2)G(1.5)/G(3)
    g = apply_R_inverse_series(1.5, monomial(2, n_max=4), 2)
    want = 1.0 / ((0.5) * math.gamma(1.5) * math.gamma(1.5) / math.gamma(3.0))
    assert abs(g[2] - want) / want < 1e-14


def test_integer_order_inverse_matches_derivative_formula():
    # R_{k+1}^{-1} = (r/k!) x^(r-1) ((1/(r x^(r-1))) d/dx)^(k+1) x^(1+kr):
    # on x^n the right side multiplies by (r/k!) prod_j (n+1+kr-jr)/r, which
    # must equal the reciprocal diagonal factor of R_{k+1}
    for r, k in [(2, 0), (2, 1), (3, 2)]:
        for n in range(0, 8):
            lhs = 1.0 / l_coefficient(n, k + 1.0, r)
            mult = 1.0
            for j in range(k + 1):
                mult *= (n + 1 + k * r - j * r) / r
            rhs = (r / math.factorial(k)) * mult
            assert abs(lhs - rhs) / abs(lhs) < 1e-13


@pytest.mark.parametrize("k,alpha,r,x,tol", [
    (0, 0.5, 2, 1.0, 1e-6),
    (1, 0.3, 3, 0.8, 1e-5),
    (0, 0.4, 2, 0.5, 1e-6),
])
def test_derivative_form_inverse_recovers_polynomials(k, alpha, r, x, tol):
    order = k + alpha
    n = 2 if k == 0 else 3
    coef = l_coefficient(n, order, r)
    got = apply_R_inverse_derivative_form(k, alpha, lambda u: coef * u ** n, x, r)
    assert abs(got - x ** n) / x ** n < tol


def test_derivative_form_inverse_recovers_constant():
    # g built as R of 1
    k, alpha, r = 0, 0.5, 2
    coef = l_coefficient(0, k + alpha, r)
    got = apply_R_inverse_derivative_form(k, alpha, lambda u: coef * np.ones_like(u), 1.0, r)
    assert abs(got - 1.0) < 1e-6


def test_derivative_vs_series_inverse_on_grid():
    # the two inverse routes agree at finite-difference accuracy
    r, k, alpha = 2, 1, 0.45
    order = k + alpha
    n = 4
    coef = l_coefficient(n, order, r)
    for x in (0.2, 0.9, 2.0):
        got = apply_R_inverse_derivative_form(k, alpha, lambda u: coef * u ** n, x, r)
        assert abs(got - x ** n) / x ** n < 1e-5


def test_adjoint_elementary_values():
    # alpha=1, r=2, a=2: integral_1^inf e^{-t^2} t dt = e^{-1}/2 at u=1
    got = apply_R_adjoint(1.0, 2.0, lambda s: np.exp(-s ** 2), 1.0, 2, Tmax=9.0)
    assert abs(got - math.exp(-1.0) / 2.0) < 1e-10
    # a=1 drops the t factor: integral_1^inf e^{-t^2} dt = (sqrt(pi)/2) erfc(1)
    from scipy.special import erfc

    got = apply_R_adjoint(1.0, 1.0, lambda s: np.exp(-s ** 2), 1.0, 2, Tmax=9.0)
    assert abs(got - 0.5 * math.sqrt(math.pi) * erfc(1.0)) < 1e-10


def test_adjoint_linearity():
    g1 = lambda s: np.exp(-s ** 2)
    g2 = lambda s: s * np.exp(-s ** 2)
    both = lambda s: 2.0 * g1(s) - 3.0 * g2(s)
    v = apply_R_adjoint(0.8, 1.5, both, 0.7, 2, Tmax=9.0)
    v1 = apply_R_adjoint(0.8, 1.5, g1, 0.7, 2, Tmax=9.0)
    v2 = apply_R_adjoint(0.8, 1.5, g2, 0.7, 2, Tmax=9.0)
    assert abs(v - (2.0 * v1 - 3.0 * v2)) < 1e-13


def test_product_factorization_examples():
    assert product_factorization_check(rd.IndexVector(2, (0.0, 0.75)), 60).residual < 1e-13
    mu3 = rd.IndexVector(3, (0.0, 0.6 - 1 / 3, 0.1))
    assert product_factorization_check(mu3, 60).residual < 1e-13
    # degenerate index: the chain is empty and j equals cos_r exactly
    mu_deg = rd.IndexVector(3, (0.0, -1 / 3, -2 / 3))
    assert product_factorization_check(mu_deg, 60).residual < 1e-14


def test_composition_law_beta_factor():
    # exact as printed at k = 0 (factor 1), and with the Beta factor beyond
    rep0 = composition_law_check(0, 0.6, 2)
    assert rep0.passed and abs(rep0.params["beta_factor"] - 1.0) < 1e-14
    rep1 = composition_law_check(1, 0.6, 2)
    assert rep1.passed
    want = math.gamma(2.0) * math.gamma(0.6) / math.gamma(1.6)
    assert abs(rep1.params["beta_factor"] - want) < 1e-13
    assert composition_law_check(2, 0.35, 3).passed


def test_inverse_rejects_nonpositive_order():
    with pytest.raises(ParameterError):
        apply_R_inverse_series(0.0, monomial(1), 2)
