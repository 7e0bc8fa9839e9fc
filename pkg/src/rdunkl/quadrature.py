"""Gauss rules on [0, 1] used by all the integral operators.

Every singular endpoint in the package is mapped onto a Jacobi weight
(1 - v)^p v^q before quadrature, which keeps the rules spectrally accurate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import roots_jacobi

from ._errors import ParameterError


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray
    kind: str

    def integrate(self, fn) -> complex:
        return complex(np.sum(self.weights * fn(self.nodes)))


def gauss_jacobi_rule(p: float, q: float, n: int) -> QuadratureRule:
    """n-point rule for integral_0^1 f(v) (1-v)^p v^q dv, p, q > -1."""
    if p <= -1.0 or q <= -1.0:
        raise ParameterError(f"Jacobi weight needs p, q > -1, got ({p}, {q})")
    if n < 1:
        raise ParameterError("need at least one node")
    x, w = roots_jacobi(n, p, q)
    nodes = 0.5 * (x + 1.0)
    weights = w / 2.0 ** (p + q + 1.0)
    return QuadratureRule(nodes, weights, f"gauss_jacobi({p},{q})")


def gauss_legendre_rule(n: int, a: float = 0.0, b: float = 1.0) -> QuadratureRule:
    if n < 1:
        raise ParameterError("need at least one node")
    x, w = np.polynomial.legendre.leggauss(n)
    nodes = 0.5 * (b - a) * (x + 1.0) + a
    weights = 0.5 * (b - a) * w
    return QuadratureRule(nodes, weights, "gauss_legendre")


def jacobi_moment(p: float, q: float, m: int) -> float:
    """integral_0^1 v^m (1-v)^p v^q dv, the Beta function B(q+m+1, p+1)."""
    from .special import gamma_ratio

    return gamma_ratio([q + m + 1.0, p + 1.0], [p + q + m + 2.0])


def rule_exactness_residual(rule: QuadratureRule, p: float, q: float) -> float:
    """Worst relative error of the rule on monomials up to degree 2n-1."""
    n = len(rule.nodes)
    worst = 0.0
    for m in range(2 * n):
        got = float(np.sum(rule.weights * rule.nodes ** m))
        want = jacobi_moment(p, q, m)
        worst = max(worst, abs(got - want) / max(abs(want), 1e-300))
    return worst
