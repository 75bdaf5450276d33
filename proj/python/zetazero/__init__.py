"""Riemann zeta zeros from the counting-phase equations.

The heavy lifting lives in the compiled ``_core`` extension: arbitrary
precision zeta/Gamma evaluation, the zero solvers (closed-form Lambert
seed, asymptotic and exact equations), Gram points, counting formulas,
pair-correlation statistics against the GUE curve, and prime-counting
reconstruction from a finite set of zeros.
"""

from ._core import (  # noqa: F401
    DomainError,
    NumericalError,
    UsageError,
    __version__,
    arg_zeta,
    chi,
    count_zeros,
    gram_point,
    gue_rhs,
    j_from_zeros,
    lambert_seed,
    lambert_w0,
    normalized_spacings,
    pair_correlation,
    pi_from_zeros,
    pi_oracle,
    psi_from_zeros,
    psi_oracle,
    riemann_siegel_theta,
    zero,
    zeta,
)

__all__ = [
    "DomainError",
    "NumericalError",
    "UsageError",
    "arg_zeta",
    "chi",
    "count_zeros",
    "gram_point",
    "gue_rhs",
    "j_from_zeros",
    "lambert_seed",
    "lambert_w0",
    "normalized_spacings",
    "pair_correlation",
    "pi_from_zeros",
    "pi_oracle",
    "psi_from_zeros",
    "psi_oracle",
    "riemann_siegel_theta",
    "zero",
    "zeta",
]
