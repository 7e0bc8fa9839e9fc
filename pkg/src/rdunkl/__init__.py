"""Cyclic-group extension of the one-variable Dunkl operator.

Series calculus for the graded function spaces, vector-index Bessel
functions, Mehler integral representations, Riemann-Liouville operators,
transmutation, the associated integral transforms, and a verification CLI
that turns every identity into a machine-checkable report.
"""

from .series import (
    CyclicStructure,
    LaurentSeries,
    evaluate,
    exp_series,
    monomial,
    mul_x_power,
    differentiate,
    project_T,
    s_action,
    scale_argument,
    series_from_json,
    series_residual,
    series_to_json,
)
from .special import (
    IndexVector,
    bessel_j_series,
    bessel_j_value,
    cos_r_series,
    cos_r_value,
    index_shift,
    pochhammer,
)
from .operators import (
    apply_D,
    apply_Delta,
    apply_Delta_rotated,
    apply_L,
    case_recurrence_check,
    chain_expansion_coeffs,
    dunkl_kernel_series,
    dunkl_kernel_values,
)
from .reports import VerificationReport, make_report

__version__ = "0.1.0"
