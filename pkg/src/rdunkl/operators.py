"""Exact series actions of the lowering, Bessel, and r-Dunkl operators.

On a monomial x^n every operator here is a weighted shift:

    lowering L_a:      x^n -> (n + a) x^(n-1)
    Bessel  Delta_mu:  the chain L_{a_{r-1}} o ... o L_{a_0}
    Dunkl   D_mu:      x^n -> (n + a_{(-n) mod r}) x^(n-1)

The Dunkl operator equals f' + (1/x) sum_k a_k T_k f; the closed weighted
shift above is used for application and the compositional form is kept as a
test oracle.  Restricted to grade k, r applications of D equal the lowering
chain started at a_k; on grade 0 that chain is exactly Delta_mu.
"""

from __future__ import annotations

import math

import numpy as np

from ._errors import ParameterError
from .series import (
    CyclicStructure,
    LaurentSeries,
    add,
    differentiate,
    lincomb,
    mul_x_power,
    project_T,
    scale_argument,
)
from .special import IndexVector, bessel_j_series, index_shift
from .reports import VerificationReport, make_report


def apply_L(f: LaurentSeries, a: float) -> LaurentSeries:
    """Lowering operator f -> f' + (a/x) f.

    Degree n feeds (n + a) * c_n into degree n - 1, including n = 0 which
    populates the principal part when a != 0.
    """
    degs = np.arange(f.n_min, f.n_max + 1)
    out = f.coeffs * (degs + a)
    grade = None if f.grade is None else (f.grade + 1) % f.r
    return LaurentSeries(f.n_min - 1, out, f.valid_order - 1, grade, f.r)


def apply_L_chain(f: LaurentSeries, a_list) -> LaurentSeries:
    out = f
    for a in a_list:
        out = apply_L(out, a)
    return out


def apply_Delta(mu: IndexVector, f: LaurentSeries) -> LaurentSeries:
    """Order-r Bessel operator: the lowering chain with a_0 applied first."""
    return apply_L_chain(f, mu.a)


def apply_Delta_rotated(mu: IndexVector, f: LaurentSeries, k: int) -> LaurentSeries:
    """Lowering chain started at a_k (indices cyclic).  This is what r
    applications of the Dunkl operator produce on grade-k input; for k = 0
    it coincides with apply_Delta."""
    r = mu.r
    return apply_L_chain(f, [mu.a[(k + j) % r] for j in range(r)])


def apply_D(mu: IndexVector, f: LaurentSeries) -> LaurentSeries:
    """r-extension of the Dunkl operator as the closed weighted shift."""
    r = mu.r
    a = np.asarray(mu.a)
    degs = np.arange(f.n_min, f.n_max + 1)
    weights = degs + a[(-degs) % r]
    grade = None if f.grade is None else (f.grade + 1) % r
    return LaurentSeries(f.n_min - 1, f.coeffs * weights, f.valid_order - 1, grade, f.r)


def apply_D_compositional(mu: IndexVector, f: LaurentSeries, c: CyclicStructure | None = None) -> LaurentSeries:
    """Oracle form f' + (1/x) sum_k a_k T_k f, assembled from the primitive
    series operations."""
    c = c or mu.cyclic
    terms = [(1.0, differentiate(f))]
    for k in range(mu.r):
        if mu.a[k] != 0.0:
            terms.append((mu.a[k], mul_x_power(project_T(f, k, c), -1)))
    out = lincomb(terms)
    # lincomb keeps the min valid_order; differentiate already dropped it by 1
    return out


def dunkl_kernel_series(mu: IndexVector, lam: complex, N: int) -> LaurentSeries:
    """Series of x -> E_mu(lam x), the r-Dunkl kernel at spectral value lam.

    E_mu = sum_{k<r} theta^(-k) D^k j_mu, and the scaled kernel is obtained
    by substituting lam*x into each D^k j_mu term.  Built this way the kernel
    satisfies D E_mu(lam x) = theta*lam*E_mu(lam x) exactly in coefficients.
    A principal part appears iff alpha_0 != 0.
    """
    c = mu.cyclic
    theta = c.theta
    j = bessel_j_series(mu, N)
    terms = []
    cur = j
    for k in range(mu.r):
        terms.append((theta ** (-k), scale_argument(cur, lam)))
        if k < mu.r - 1:
            cur = apply_D(mu, cur)
    return lincomb(terms)


def dunkl_kernel_values(mu: IndexVector, z, N: int | None = None):
    """Point values of E_mu at complex arguments via the series."""
    from .series import evaluate
    from ._errors import SeriesOverflowError

    z = np.asarray(z, dtype=complex)
    zmax = float(np.max(np.abs(z))) if z.size else 0.0
    if N is None:
        N = mu.r * (int(math.ceil(1.6 * zmax)) + 28)
    ser = dunkl_kernel_series(mu, 1.0, N)
    # cancellation guard: largest term magnitude against the result scale,
    # in logs so the peak term cannot itself overflow
    vals = evaluate(ser, z)
    top = min(ser.valid_order, ser.n_max)
    degs = np.arange(ser.n_min, top + 1)
    cfs = ser.coeffs[: top - ser.n_min + 1]
    mags = np.abs(cfs)
    nz = mags > 0
    if zmax > 1.0 and np.any(nz):
        log_peak = float(np.max(np.log(mags[nz]) + np.clip(degs[nz], 0, None) * np.log(zmax)))
        scale = max(float(np.min(np.abs(np.atleast_1d(vals)))), 1e-300)
        if log_peak - np.log(scale) > np.log(1e12):
            raise SeriesOverflowError(
                f"kernel evaluation at |z| <= {zmax:.3g} loses more than 12 digits; "
                f"reliable range is roughly |z| < 30"
            )
    return vals


def bessel_eigen_residuals(mu: IndexVector, lam: complex, N: int) -> tuple[float, float]:
    """Residuals of the eigen-equation for the Bessel chain on x -> j_mu(lam x).

    Returns (regular, principal): ``regular`` is the coefficient residual of
    Delta j + lam^r j over degrees >= 0, which vanishes for every admissible
    index.  When alpha_0 != 0 the chain also produces the singular ladder
    term r^r (alpha_0 ... alpha_{r-1}) x^(-r) out of the constant 1 = j(0);
    ``principal`` is the deviation of that coefficient from its closed form
    (zero when some alpha_k = 0 and the equation is a genuine eigen-identity
    on the whole Laurent range).
    """
    from .series import series_residual

    r = mu.r
    j = scale_argument(bessel_j_series(mu, N), lam)
    dj = apply_Delta(mu, j)
    rhs = LaurentSeries(j.n_min, -(lam ** r) * j.coeffs, j.valid_order - r)
    regular = series_residual(dj, rhs, from_degree=0)
    closed = float(r) ** r
    for al in mu.alphas:
        closed *= al
    scale = max(abs(closed), 1.0)
    principal = abs(dj[-r] - closed) / scale
    return regular, principal


def case_recurrence_check(mu: IndexVector, N: int) -> VerificationReport:
    """Ladder relation for D j_mu.

    alpha_0 != 0:  D j_mu = (r alpha_0 / x) j_{mu-1}
    alpha_0 == 0:  D j_mu = -(x/r)^(r-1) j_{mu+1} / prod_{k>=1}(alpha_k + 1)
    """
    from .series import series_residual

    r = mu.r
    lhs = apply_D(mu, bessel_j_series(mu, N))
    if abs(mu.alphas[0]) > 1e-12:
        shifted = index_shift(mu, "minus")
        rhs = mul_x_power(bessel_j_series(shifted, N), -1)
        rhs = LaurentSeries(rhs.n_min, r * mu.alphas[0] * rhs.coeffs, rhs.valid_order)
        case = "alpha0_nonzero"
    else:
        shifted = index_shift(mu, "plus")
        denom = 1.0
        for al in mu.alphas[1:]:
            denom *= al + 1.0
        rhs = mul_x_power(bessel_j_series(shifted, N), r - 1)
        rhs = LaurentSeries(
            rhs.n_min,
            -rhs.coeffs / (denom * float(r) ** (r - 1)),
            rhs.valid_order,
        )
        case = "alpha0_zero"
    resid = series_residual(lhs, rhs)
    return make_report(
        check_id=f"case_recurrence.{case}",
        params={"r": r, "alphas": list(mu.alphas), "N": N},
        residual=resid,
        tolerance=1e-12,
    )


def chain_expansion_coeffs(a_prefix) -> list[float]:
    """Coefficients P_0..P_k with

        L_{a_{k-1}} o ... o L_{a_0} = sum_j P_j x^(-j) (d/dx)^(k-j).

    The chain multiplies x^m by G(m) = prod_j (m - j + a_j), and matching
    G against falling factorials at m = 0..k gives a triangular system with
    diagonal s!, solved exactly by forward substitution.
    """
    a = [float(v) for v in a_prefix]
    k = len(a)
    if k < 1:
        raise ParameterError("need at least one chain coefficient")

    def G(m):
        out = 1.0
        for j in range(k):
            out *= m - j + a[j]
        return out

    P = [0.0] * (k + 1)
    P[k] = G(0)
    for s in range(1, k + 1):
        acc = G(s)
        for l in range(s):
            acc -= P[k - l] * (math.factorial(s) // math.factorial(s - l))
        P[k - s] = acc / math.factorial(s)
    return P


def chain_expansion_closed_form(a_prefix) -> list[float]:
    """Diagnostic only: the printed closed form for the expansion
    coefficients, P_{k-s} = (1/s!) sum_j (-1)^(s-j) C(s-j, j) prod_i (a_i+i+j).
    Its binomial convention is ambiguous and it disagrees with the defining
    triangular solve for k >= 2; compare, never trust."""
    a = [float(v) for v in a_prefix]
    k = len(a)
    P = [0.0] * (k + 1)
    for s in range(k + 1):
        acc = 0.0
        for j in range(s + 1):
            prod = 1.0
            for i in range(k):
                prod *= a[i] + i + j
            acc += (-1.0) ** (s - j) * math.comb(s - j, j) * prod
        P[k - s] = acc / math.factorial(s)
    return P


def power_identity_residual(mu: IndexVector, n: int) -> tuple[float, float]:
    """For the monomial x^n, compare r-fold Dunkl application against the
    grade-rotated lowering chain and against the fixed Bessel chain.

    Returns (rotated_residual, fixed_delta_residual), both relative.
    """
    from .series import monomial, series_residual

    r = mu.r
    f = monomial(n)
    k = (-n) % r
    dpow = f
    for _ in range(r):
        dpow = apply_D(mu, dpow)
    rot = apply_Delta_rotated(mu, f, k)
    fixed = apply_Delta(mu, f)
    return series_residual(dpow, rot), series_residual(dpow, fixed)
