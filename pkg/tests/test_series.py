import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import rdunkl as rd
from rdunkl._errors import DomainError, ParameterError
from rdunkl.series import add, zero_series


def random_series(rng, n_min=-3, n_max=25):
    coeffs = rng.standard_normal(n_max - n_min + 1) + 1j * rng.standard_normal(n_max - n_min + 1)
    return rd.LaurentSeries(n_min, coeffs)


def test_cyclic_structure_roots():
    for r in range(2, 9):
        c = rd.CyclicStructure(r)
        assert abs(c.omega - c.theta ** 2) < 1e-15
        assert abs(abs(c.omega) - 1.0) < 1e-15
        assert abs(abs(c.theta) - 1.0) < 1e-15
        assert abs(c.omega ** r - 1.0) < 1e-14
        assert abs(c.theta ** r + 1.0) < 1e-14


def test_cyclic_structure_rejects_r1():
    with pytest.raises(ParameterError):
        rd.CyclicStructure(1)


def test_s_action_fixes_odd_monomial_r2():
    # s_1 x = omega^(1+1) x = x, so x sits in grade 1
    c = rd.CyclicStructure(2)
    x = rd.monomial(1)
    out = rd.s_action(x, 1, c)
    assert abs(out[1] - 1.0) < 1e-15


def test_s_action_identity_on_constants():
    for r in (2, 3, 5):
        c = rd.CyclicStructure(r)
        one = rd.monomial(0)
        assert abs(rd.s_action(one, 0, c)[0] - 1.0) < 1e-15


def test_s_action_fixes_x2_r3():
    # 2 = -1 mod 3, so x^2 is s_1-invariant
    c = rd.CyclicStructure(3)
    out = rd.s_action(rd.monomial(2), 1, c)
    assert abs(out[2] - 1.0) < 1e-14


def test_projector_on_monomials():
    c = rd.CyclicStructure(2)
    x3 = rd.monomial(3)
    assert abs(rd.project_T(x3, 1, c)[3] - 1.0) == 0.0
    assert rd.project_T(x3, 0, c)[3] == 0.0
    c3 = rd.CyclicStructure(3)
    assert abs(rd.project_T(rd.monomial(2), 1, c3)[2] - 1.0) == 0.0


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_projector_completeness_idempotence_annihilation(r):
    rng = np.random.default_rng(7 + r)
    c = rd.CyclicStructure(r)
    f = random_series(rng)
    total = zero_series(f.n_min, f.n_max)
    for k in range(r):
        pk = rd.project_T(f, k, c)
        total = add(total, pk)
        assert rd.series_residual(rd.project_T(pk, k, c), pk) == 0.0
        for l in range(r):
            if l != k:
                both = rd.project_T(pk, l, c)
                assert np.max(np.abs(both.coeffs)) == 0.0
    assert rd.series_residual(total, f) < 1e-15


@pytest.mark.parametrize("r,k", [(2, 0), (2, 1), (3, 1), (3, 2), (5, 3)])
def test_projector_commutes_with_action(r, k):
    rng = np.random.default_rng(40 + r + k)
    c = rd.CyclicStructure(r)
    f = random_series(rng)
    lhs = rd.project_T(rd.s_action(f, k, c), k, c)
    rhs = rd.s_action(rd.project_T(f, k, c), k, c)
    assert rd.series_residual(lhs, rhs) < 1e-15


@pytest.mark.parametrize("r,k", [(2, 0), (3, 0), (3, 1), (4, 2)])
def test_projector_shift_law(r, k):
    # projecting after a 1/x shift equals shifting the (k)-projection, with
    # the grade stepping to k+1
    rng = np.random.default_rng(11 * r + k)
    c = rd.CyclicStructure(r)
    f = random_series(rng)
    lhs = rd.project_T(rd.mul_x_power(f, -1), k + 1, c)
    rhs = rd.mul_x_power(rd.project_T(f, k, c), -1)
    assert rd.series_residual(lhs, rhs) < 1e-15


def test_differentiate_basics():
    assert rd.differentiate(rd.monomial(3))[2] == 3.0
    d1 = rd.differentiate(rd.monomial(0))
    assert all(abs(d1[n]) == 0.0 for n in d1.degrees)
    dm = rd.differentiate(rd.monomial(-1))
    assert dm[-2] == -1.0


def test_mul_x_power_basics():
    assert rd.mul_x_power(rd.monomial(3), -1)[2] == 1.0
    assert rd.mul_x_power(rd.monomial(0), 2)[2] == 1.0
    m = rd.mul_x_power(rd.monomial(0), -1)
    assert m[-1] == 1.0 and m.n_min == -1


def test_evaluate_against_exponential():
    f = rd.exp_series(1.0, 30)
    assert abs(rd.evaluate(f, 1.0) - np.exp(1.0)) < 1e-14


def test_evaluate_constant_and_principal():
    assert rd.evaluate(rd.monomial(0), 17.3) == 17.3 * 0 + 1.0
    assert abs(rd.evaluate(rd.monomial(-1), 2.0) - 0.5) < 1e-15


def test_evaluate_principal_at_zero_raises():
    with pytest.raises(DomainError):
        rd.evaluate(rd.monomial(-1), 0.0)


def test_grade_tag_validation():
    c = rd.CyclicStructure(3)
    good = rd.project_T(rd.monomial(2), 1, c)
    assert good.grade == 1
    with pytest.raises(ParameterError):
        rd.LaurentSeries(0, np.array([1.0, 1.0]), grade=0, r=3)


def test_valid_order_clamps_comparisons():
    a = rd.LaurentSeries(0, np.array([1.0, 2.0, 3.0]), valid_order=1)
    b = rd.LaurentSeries(0, np.array([1.0, 2.0, 99.0]), valid_order=2)
    assert rd.series_residual(a, b) == 0.0


def test_json_round_trip():
    f = rd.LaurentSeries(-2, np.array([1 + 2j, 0.5, -3j, 4.0]))
    blob = json.dumps(rd.series_to_json(f))
    g = rd.series_from_json(json.loads(blob))
    assert g.n_min == f.n_min
    assert np.allclose(g.coeffs, f.coeffs)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=2, max_value=6),
    st.integers(min_value=0, max_value=1000),
)
def test_projection_sum_is_identity_property(r, seed):
    rng = np.random.default_rng(seed)
    c = rd.CyclicStructure(r)
    f = random_series(rng, n_min=-2, n_max=18)
    total = zero_series(f.n_min, f.n_max)
    for k in range(r):
        total = add(total, rd.project_T(f, k, c))
    assert rd.series_residual(total, f) < 1e-15
