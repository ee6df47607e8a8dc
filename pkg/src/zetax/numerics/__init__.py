"""Multiprecision kernel: certified reals, special functions, quadrature, solvers."""

from .certified import (
    CertifiedComplex,
    CertifiedReal,
    DomainError,
    ToleranceConfig,
    catan,
    cconst,
    cexp,
    clog,
    cmax,
    cpi,
    csqrt,
    monotone,
)
from .quadrature import certified_integral, gauss_legendre_nodes, integrate
from .solvers import NoRootError, bisect_secant, golden_section_min, is_unimodal, scan
from .special import (
    S_series,
    digamma,
    stirling_deviation,
    zeta_deriv_real,
    zeta_log_deriv,
    zeta_real,
)

__all__ = [
    "CertifiedComplex", "CertifiedReal", "DomainError", "ToleranceConfig",
    "catan", "cconst", "cexp", "clog", "cmax", "cpi", "csqrt", "monotone",
    "certified_integral", "gauss_legendre_nodes", "integrate",
    "NoRootError", "bisect_secant", "golden_section_min", "is_unimodal", "scan",
    "S_series", "digamma", "stirling_deviation", "zeta_deriv_real",
    "zeta_log_deriv", "zeta_real",
]
