"""Vector-index Bessel functions, the r-trigonometric cosine, and the
gamma-function utilities behind them.

The Bessel function of vector index mu = (alpha_0, ..., alpha_{r-1}) is the
entire series

    j_mu(x) = sum_n (-1)^n x^(n r) / [ (alpha_0+1)_n ... (alpha_{r-1}+1)_n r^(n r) ]

with j_mu(0) = 1.  It is the grade-0 eigenfunction of the order-r Bessel
operator.  For r = 2 and mu = (0, alpha) it reduces to the classical
normalized Bessel function, and for alpha_k = -k/r it degenerates to cos_r.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln, gammasgn

from ._errors import ParameterError, PoleError, SeriesOverflowError
from .series import CyclicStructure, LaurentSeries, exp_series, project_T

_NEG_INT_TOL = 1e-12


def _is_nonpositive_integer(x: float) -> bool:
    return x <= _NEG_INT_TOL and abs(x - round(x)) < _NEG_INT_TOL


@dataclass(frozen=True)
class IndexVector:
    """The index vector mu: order r and reals alpha_0..alpha_{r-1}.

    The derived operator coefficients are a_k = r*alpha_k + k.  No alpha_k
    may be a negative integer, so the Pochhammer denominators of j_mu never
    vanish.
    """

    r: int
    alphas: tuple
    a: tuple = field(init=False)

    def __post_init__(self):
        r = int(self.r)
        if r < 2:
            raise ParameterError("index vector needs r >= 2")
        alphas = tuple(float(x) for x in self.alphas)
        if len(alphas) != r:
            raise ParameterError(f"expected {r} alphas, got {len(alphas)}")
        for al in alphas:
            if al < -0.5 and _is_nonpositive_integer(al):
                raise PoleError(f"alpha = {al} is a negative integer")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "a", tuple(r * al + k for k, al in enumerate(alphas)))

    @property
    def cyclic(self) -> CyclicStructure:
        return CyclicStructure(self.r)


def pochhammer(beta: float, n: int) -> float:
    """Rising factorial (beta)_n = beta (beta+1) ... (beta+n-1).

    Computed by direct product for n <= 64 and through log-gamma beyond.
    Raises PoleError when a factor vanishes.
    """
    if n < 0:
        raise ParameterError("pochhammer order must be >= 0")
    if n == 0:
        return 1.0
    for j in range(n):
        if abs(beta + j) < _NEG_INT_TOL:
            raise PoleError(f"({beta})_{n} hits a zero factor at j = {j}")
    if n <= 64:
        out = 1.0
        for j in range(n):
            out *= beta + j
        return out
    sign = gammasgn(beta + n) * gammasgn(beta)
    return sign * np.exp(gammaln(beta + n) - gammaln(beta))


def bessel_j_series(mu: IndexVector, N: int) -> LaurentSeries:
    """Series of j_mu through degree N (grade tag 0)."""
    r = mu.r
    coeffs = np.zeros(N + 1, dtype=complex)
    term = 1.0
    n = 0
    while n * r <= N:
        coeffs[n * r] = term
        denom = 1.0
        for al in mu.alphas:
            fac = al + 1.0 + n
            if abs(fac) < _NEG_INT_TOL:
                raise PoleError(f"(alpha+1)_n factor vanishes at alpha={al}, n={n}")
            denom *= fac
        term = -term / (denom * float(r) ** r)
        n += 1
    return LaurentSeries(0, coeffs, N, 0, r)


def bessel_j_value(mu: IndexVector, x) -> complex | np.ndarray:
    """Adaptive point evaluation of j_mu: terms are added until the next one
    drops below 1e-16 of the running sum and the degree has passed |x|."""
    x = np.asarray(x, dtype=complex)
    xr = x ** mu.r
    rr = float(mu.r) ** mu.r
    total = np.ones_like(x)
    term = np.ones_like(x)
    n = 0
    maxabs = np.ones(np.shape(x))
    while True:
        denom = rr
        for al in mu.alphas:
            denom *= al + 1.0 + n
        term = -term * xr / denom
        total = total + term
        n += 1
        t = np.max(np.abs(term))
        maxabs = np.maximum(maxabs, np.abs(term))
        if t < 1e-16 * max(np.max(np.abs(total)), 1e-300) and n * mu.r > np.max(np.abs(x)):
            break
        if n > 4000:
            raise SeriesOverflowError("j_mu series did not settle within 4000 terms")
    loss = np.max(maxabs / np.maximum(np.abs(total), 1e-300))
    if loss > 1e12:
        raise SeriesOverflowError(
            f"j_mu evaluation lost too many digits (cancellation {loss:.1e}); "
            f"keep |x| below roughly {int(np.max(np.abs(x)))}"
        )
    if total.ndim == 0:
        return complex(total)
    return total


def cos_r_series(c: CyclicStructure, N: int) -> LaurentSeries:
    """Series of cos_r, the grade-0 part of exp(theta*x); equals
    sum_n (-1)^n x^(n r)/(n r)!."""
    return project_T(exp_series(c.theta, N), 0, c)


def cos_r_value(c: CyclicStructure, z) -> complex | np.ndarray:
    """cos_r by the exact r-point average (1/r) sum_k exp(theta omega^k z)."""
    z = np.asarray(z, dtype=complex)
    val = np.zeros_like(z)
    for k in range(c.r):
        val = val + np.exp(c.theta * c.omega_pow(k) * z)
    val = val / c.r
    if val.ndim == 0:
        return complex(val)
    return val


def index_shift(mu: IndexVector, direction: str) -> IndexVector:
    """Index shifts used by the ladder relations: "minus" decrements alpha_0
    only, "plus" increments alpha_1..alpha_{r-1} only."""
    if direction == "minus":
        shifted = (mu.alphas[0] - 1.0,) + mu.alphas[1:]
    elif direction == "plus":
        shifted = (mu.alphas[0],) + tuple(al + 1.0 for al in mu.alphas[1:])
    else:
        raise ParameterError("direction must be 'minus' or 'plus'")
    return IndexVector(mu.r, shifted)


def gamma_ratio(numerator, denominator) -> float:
    """prod Gamma(numerator) / prod Gamma(denominator) via log-gamma, with
    sign tracking so negative non-integer arguments are handled."""
    log = 0.0
    sign = 1.0
    for v in numerator:
        if _is_nonpositive_integer(v):
            raise PoleError(f"Gamma({v}) pole in a ratio numerator")
        log += gammaln(v)
        sign *= gammasgn(v)
    for v in denominator:
        if _is_nonpositive_integer(v):
            return 0.0  # Gamma pole downstairs kills the ratio
        log -= gammaln(v)
        sign *= gammasgn(v)
    return sign * float(np.exp(log))
