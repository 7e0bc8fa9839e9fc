"""Truncated Laurent series and the cyclic group actions on them.

Functions are represented as truncated Laurent series with a finite
principal part.  Every operator in the package (derivative, 1/x, grade
projectors, lowering operators, fractional means) acts on monomials as an
exact degree shift or diagonal, so analytic identities become finite
coefficient identities.

Each series carries a ``valid_order`` watermark: degree-lowering operations
shrink the range of trustworthy coefficients, and comparisons clamp to the
common watermark.  This keeps truncation edge effects out of residuals.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._errors import DomainError, ParameterError

#: relative threshold under which a coefficient counts as zero for grade checks
GRADE_ZERO_TOL = 1e-13


@dataclass(frozen=True)
class CyclicStructure:
    """Order ``r`` of the cyclic group together with the two unit roots that
    drive everything: ``omega = exp(2i pi/r)`` and ``theta = exp(i pi/r)``
    (so ``omega = theta**2`` and ``theta**r = -1``)."""

    r: int
    omega: complex = field(init=False)
    theta: complex = field(init=False)

    def __post_init__(self):
        if int(self.r) != self.r or self.r < 2:
            raise ParameterError(f"cyclic order must be an integer >= 2, got {self.r}")
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "theta", complex(np.exp(1j * np.pi / self.r)))
        object.__setattr__(self, "omega", complex(np.exp(2j * np.pi / self.r)))

    def omega_pow(self, k: int) -> complex:
        return complex(np.exp(2j * np.pi * (k % self.r) / self.r))


@dataclass(frozen=True)
class LaurentSeries:
    """Coefficients for degrees ``n_min .. n_min + len(coeffs) - 1``.

    ``valid_order`` marks the highest degree whose coefficient is still
    trustworthy after degree-lowering operations.  ``grade`` is advisory
    metadata: when set, construction checks that the support sits on degrees
    ``n = -grade (mod r)``.
    """

    n_min: int
    coeffs: np.ndarray
    valid_order: int = None  # type: ignore[assignment]
    grade: int | None = None
    r: int | None = None  # needed only to validate a grade tag

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex).copy()
        if c.ndim != 1 or c.size == 0:
            raise ParameterError("coeffs must be a nonempty 1-d array")
        object.__setattr__(self, "coeffs", c)
        if self.valid_order is None:
            object.__setattr__(self, "valid_order", self.n_max)
        if self.valid_order > self.n_max:
            raise ParameterError("valid_order cannot exceed the stored degree range")
        if self.grade is not None:
            if self.r is None:
                raise ParameterError("a grade tag needs the cyclic order r")
            self._check_grade()

    def _check_grade(self):
        scale = np.max(np.abs(self.coeffs))
        if scale == 0.0:
            return
        bad = [
            n
            for n in self.degrees
            if (n + self.grade) % self.r != 0
            and abs(self[n]) > GRADE_ZERO_TOL * scale
        ]
        if bad:
            raise ParameterError(
                f"grade {self.grade} tag inconsistent with support at degrees {bad[:4]}"
            )

    @property
    def n_max(self) -> int:
        return self.n_min + len(self.coeffs) - 1

    @property
    def degrees(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def __getitem__(self, n: int) -> complex:
        """Coefficient at degree ``n`` (zero outside the stored range)."""
        if self.n_min <= n <= self.n_max:
            return complex(self.coeffs[n - self.n_min])
        return 0.0

    def has_principal_part(self, tol: float = 0.0) -> bool:
        if self.n_min >= 0:
            return False
        head = self.coeffs[: -self.n_min]
        scale = max(np.max(np.abs(self.coeffs)), 1.0)
        return bool(np.any(np.abs(head) > tol * scale))

    def with_grade(self, k: int, r: int) -> "LaurentSeries":
        return LaurentSeries(self.n_min, self.coeffs, self.valid_order, k % r, r)


def monomial(n: int, coeff: complex = 1.0, n_max: int | None = None) -> LaurentSeries:
    top = n if n_max is None else max(n, n_max)
    c = np.zeros(top - n + 1, dtype=complex)
    c[0] = coeff
    return LaurentSeries(n, c)


def zero_series(n_min: int = 0, n_max: int = 0) -> LaurentSeries:
    return LaurentSeries(n_min, np.zeros(n_max - n_min + 1, dtype=complex))


def exp_series(rate: complex, N: int) -> LaurentSeries:
    """Series of exp(rate*x) through degree N."""
    n = np.arange(N + 1)
    coeffs = np.empty(N + 1, dtype=complex)
    coeffs[0] = 1.0
    for k in range(1, N + 1):
        coeffs[k] = coeffs[k - 1] * rate / k
    return LaurentSeries(0, coeffs, N)


def s_action(f: LaurentSeries, k: int, c: CyclicStructure) -> LaurentSeries:
    """The twisted rotation g(x) -> omega^k g(omega x): coefficient at degree
    n picks up omega^(k+n)."""
    degs = np.arange(f.n_min, f.n_max + 1)
    phases = np.exp(2j * np.pi * ((k + degs) % c.r) / c.r)
    return LaurentSeries(f.n_min, f.coeffs * phases, f.valid_order, f.grade, f.r)


def project_T(f: LaurentSeries, k: int, c: CyclicStructure) -> LaurentSeries:
    """Grade-k projector: keeps degrees n with n = -k (mod r), zeroes the rest.

    Idempotent; distinct projectors annihilate each other; the sum over
    k = 0..r-1 is the identity.
    """
    degs = np.arange(f.n_min, f.n_max + 1)
    mask = (degs + k) % c.r == 0
    return LaurentSeries(f.n_min, np.where(mask, f.coeffs, 0.0), f.valid_order, k % c.r, c.r)


def differentiate(f: LaurentSeries) -> LaurentSeries:
    degs = np.arange(f.n_min, f.n_max + 1)
    out = f.coeffs * degs
    grade = None if f.grade is None else (f.grade + 1) % f.r
    return LaurentSeries(f.n_min - 1, out, f.valid_order - 1, grade, f.r)


def mul_x_power(f: LaurentSeries, m: int) -> LaurentSeries:
    grade = None if f.grade is None else (f.grade - m) % f.r
    return LaurentSeries(f.n_min + m, f.coeffs, f.valid_order + m, grade, f.r)


def scale_argument(f: LaurentSeries, lam: complex) -> LaurentSeries:
    """Series of x -> f(lam*x); exact on coefficients."""
    if lam == 0:
        if f.has_principal_part(GRADE_ZERO_TOL):
            raise DomainError("cannot substitute x -> 0 into a principal part")
        return LaurentSeries(0, np.array([f[0]]), f.valid_order if f.valid_order >= 0 else 0)
    degs = np.arange(f.n_min, f.n_max + 1)
    return LaurentSeries(f.n_min, f.coeffs * lam ** degs, f.valid_order, f.grade, f.r)


def add(f: LaurentSeries, g: LaurentSeries) -> LaurentSeries:
    n_min = min(f.n_min, g.n_min)
    n_max = max(f.n_max, g.n_max)
    c = np.zeros(n_max - n_min + 1, dtype=complex)
    c[f.n_min - n_min : f.n_max - n_min + 1] += f.coeffs
    c[g.n_min - n_min : g.n_max - n_min + 1] += g.coeffs
    grade = f.grade if f.grade == g.grade else None
    return LaurentSeries(n_min, c, min(f.valid_order, g.valid_order), grade, f.r or g.r)


def lincomb(pairs) -> LaurentSeries:
    acc = None
    for w, f in pairs:
        term = LaurentSeries(f.n_min, w * f.coeffs, f.valid_order, f.grade, f.r)
        acc = term if acc is None else add(acc, term)
    if acc is None:
        return zero_series()
    return acc


def evaluate(f: LaurentSeries, x) -> complex | np.ndarray:
    """Horner evaluation over degrees n_min..valid_order.

    Raises DomainError at x = 0 when a nonzero principal part is present.
    """
    x = np.asarray(x, dtype=complex)
    top = min(f.valid_order, f.n_max)
    if top < f.n_min:
        raise DomainError("no trustworthy coefficients left to evaluate")
    coeffs = f.coeffs[: top - f.n_min + 1]
    degs = np.arange(f.n_min, top + 1)
    if f.n_min < 0 and np.any(np.abs(coeffs[degs < 0]) > 0) and np.any(x == 0):
        raise DomainError("evaluation at 0 with nonzero principal part")
    reg = coeffs[degs >= 0]
    val = np.zeros_like(x)
    for cn in reg[::-1]:
        val = val * x + cn
    pp = coeffs[degs < 0]  # degrees n_min .. -1
    if pp.size:
        with np.errstate(divide="ignore", invalid="ignore"):
            inv = np.where(x == 0, 0.0, 1.0 / x)
        acc = np.zeros_like(x)
        for cn in pp:  # Horner in 1/x, most negative degree innermost
            acc = (acc + cn) * inv
        val = val + acc
    if val.ndim == 0:
        return complex(val)
    return val


def series_residual(f: LaurentSeries, g: LaurentSeries, from_degree: int | None = None) -> float:
    """Max coefficient difference over the common trustworthy range, relative
    to the larger coefficient scale.  ``from_degree`` floors the compared
    range (used by identities that are only asserted on the regular part)."""
    top = min(f.valid_order, g.valid_order)
    lo = min(f.n_min, g.n_min)
    if from_degree is not None:
        lo = max(lo, from_degree)
    if top < lo:
        raise ParameterError("series share no trustworthy degrees")
    diffs = [abs(f[n] - g[n]) for n in range(lo, top + 1)]
    scale = max(
        max((abs(f[n]) for n in range(lo, top + 1)), default=0.0),
        max((abs(g[n]) for n in range(lo, top + 1)), default=0.0),
        1e-300,
    )
    return max(diffs) / scale


def series_to_json(f: LaurentSeries) -> dict:
    return {
        "n_min": int(f.n_min),
        "coeffs": [[float(z.real), float(z.imag)] for z in f.coeffs],
    }


def series_from_json(obj: dict) -> LaurentSeries:
    coeffs = np.array([complex(re, im) for re, im in obj["coeffs"]], dtype=complex)
    return LaurentSeries(int(obj["n_min"]), coeffs)
