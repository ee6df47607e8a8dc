"""Explicit two-sided window for the zero-counting function N_K(T).

For T >= 1 and 0 < eta <= 1/2,

    |N_K(T) - (T/pi) log(d_K (T/(2 pi e))^n_K)|
        <= c1(eta) (log d_K + n_K log T) + c2(eta) n_K + g_cap

with c1(eta) = (1 + 2 eta)/(pi log 2) and

    c2(eta) = b2 - b3 eta + (2/log 2) log(zeta(1+eta)^2 / zeta(2+2eta))
              + (2/pi) log zeta(3/2 + 2 eta).

The constants b1, b2, b3 and g_cap are recomputed here rather than copied.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from mpmath import mp, mpf

from .numerics import (
    CertifiedReal,
    DomainError,
    ToleranceConfig,
    cconst,
    clog,
    cpi,
    csqrt,
    golden_section_min,
    is_unimodal,
    scan,
    stirling_deviation,
    zeta_real,
)

DEFAULT_CONFIG = ToleranceConfig()

# rounded values printed in the theorem statement
STATEMENT_B2 = mpf("0.2675")
STATEMENT_B3 = mpf("0.2680")
STATEMENT_G_CAP = mpf("7.6227")

ETA_MIN = mpf("1e-4")
ETA_MAX = mpf("0.5")
ETA_SCAN_POINTS = 200


@dataclass(frozen=True)
class FieldParams:
    """Degree, signature and log-discriminant of a number field.

    When the discriminant ``d_K`` is known exactly, ``log_disc`` is recomputed
    at the working precision of each evaluation; otherwise the supplied
    ``log_disc`` is taken as exact.
    """

    n_K: int
    r1: int
    r2: int
    log_disc: float
    d_K: int | None = None

    def __post_init__(self):
        if self.n_K < 1 or self.r1 < 0 or self.r2 < 0:
            raise DomainError("n_K >= 1 and r1, r2 >= 0 are required")
        if self.r1 + 2 * self.r2 != self.n_K:
            raise DomainError(f"r1 + 2 r2 = {self.r1 + 2 * self.r2} != n_K = {self.n_K}")
        if self.log_disc < 0:
            raise DomainError("log_disc must be non-negative")
        if self.n_K >= 2 and self.log_disc <= 0:
            raise DomainError("fields of degree >= 2 have d_K > 1")

    @classmethod
    def from_discriminant(cls, n_K: int, r1: int, r2: int, d_K: int) -> "FieldParams":
        return cls(n_K, r1, r2, float(mp.log(abs(d_K))), abs(d_K))

    def certified_log_disc(self, cfg: ToleranceConfig) -> CertifiedReal:
        with cfg.workdps():
            if self.d_K is not None:
                return clog(self.d_K)
            return CertifiedReal(mpf(self.log_disc), cfg.rounding_floor(self.log_disc))


RATIONALS = FieldParams(1, 1, 0, 0.0, 1)


@dataclass(frozen=True)
class EtaConstants:
    eta: mpf
    c1: CertifiedReal
    c2: CertifiedReal
    b1: CertifiedReal
    b2: CertifiedReal
    b3: CertifiedReal
    g_cap: CertifiedReal


@dataclass(frozen=True)
class CountWindow:
    T: mpf
    main_term: CertifiedReal
    error_bound: CertifiedReal

    @property
    def lower(self) -> mpf:
        """Smallest count compatible with the window."""
        return self.main_term.lower - self.error_bound.upper

    @property
    def upper(self) -> mpf:
        return self.main_term.upper + self.error_bound.upper

    def margin(self, count: int) -> mpf:
        """Distance from ``count`` to the nearer window edge (negative if outside)."""
        return self.error_bound.lower - abs(count - self.main_term.value) - self.main_term.radius


def _check_eta(eta) -> mpf:
    eta = mpf(eta)
    if not 0 < eta <= mpf(1) / 2:
        raise DomainError(f"eta must lie in (0, 1/2], got {eta}")
    return eta


def _log2() -> CertifiedReal:
    return cconst(mp.ln2)


def b1_constant(cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """sqrt(1 + (5/2)^2) + 2."""
    with cfg.workdps():
        return csqrt(1 + mpf(25) / 4) + 2


def _log_b1_over_2pi(cfg) -> CertifiedReal:
    return clog(b1_constant(cfg) / (2 * cpi()))


def b2_constant(cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """log(b1/2pi)/(pi log 2) + 2 * (half-argument Stirling deviation at T=1)/pi."""
    with cfg.workdps():
        pi = cpi()
        stirling = stirling_deviation(1, "half-arg", cfg)
        return _log_b1_over_2pi(cfg) / (pi * _log2()) + 2 * stirling / pi


def b3_constant(cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """-2 log(b1/2pi)/(pi log 2)."""
    with cfg.workdps():
        return -2 * _log_b1_over_2pi(cfg) / (cpi() * _log2())


def g_expression(T, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """(1/log 2) log(1 + 5/(2T)) + 2 + log(3 b1)/log 2, decreasing in T."""
    with cfg.workdps():
        T = mpf(T)
        if T < 1:
            raise DomainError(f"T must be >= 1, got {T}")
        log2 = _log2()
        return clog(1 + mpf(5) / (2 * T)) / log2 + 2 + clog(3 * b1_constant(cfg)) / log2


def g_limit(cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """Limit of :func:`g_expression` as T -> infinity."""
    with cfg.workdps():
        return 2 + clog(3 * b1_constant(cfg)) / _log2()


def g_cap(cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """Supremum over T >= 1 of :func:`g_expression`, attained at T = 1."""
    return g_expression(1, cfg)


def c1_of_eta(eta, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    with cfg.workdps():
        eta = _check_eta(eta)
        return (1 + 2 * CertifiedReal.exact(eta)) / (cpi() * _log2())


def c2_of_eta(eta, cfg: ToleranceConfig = DEFAULT_CONFIG, statement_constants: bool = False,
              ) -> CertifiedReal:
    """c2(eta) with the recomputed b2, b3 (or the statement's rounded ones)."""
    with cfg.workdps():
        return _c2_cached(_check_eta(eta), cfg, statement_constants)


@lru_cache(maxsize=4096)
def _c2_cached(eta: mpf, cfg: ToleranceConfig, statement_constants: bool) -> CertifiedReal:
    with cfg.workdps():
        if statement_constants:
            b2, b3 = CertifiedReal.exact(STATEMENT_B2), CertifiedReal.exact(STATEMENT_B3)
        else:
            b2, b3 = b2_constant(cfg), b3_constant(cfg)
        z1 = zeta_real(1 + eta, cfg)
        z2 = zeta_real(2 + 2 * eta, cfg)
        z3 = zeta_real(mpf(3) / 2 + 2 * eta, cfg)
        return (b2 - b3 * eta + 2 * clog(z1 * z1 / z2) / _log2()
                + 2 * clog(z3) / cpi())


def eta_constants(eta, cfg: ToleranceConfig = DEFAULT_CONFIG) -> EtaConstants:
    with cfg.workdps():
        eta = _check_eta(eta)
        return EtaConstants(eta, c1_of_eta(eta, cfg), c2_of_eta(eta, cfg), b1_constant(cfg),
                            b2_constant(cfg), b3_constant(cfg), g_cap(cfg))


def main_term(field: FieldParams, T, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """(T/pi) log(d_K (T/(2 pi e))^n_K)."""
    with cfg.workdps():
        T = mpf(T)
        log_disc = field.certified_log_disc(cfg)
        inner = log_disc + field.n_K * (clog(T) - clog(2 * cpi()) - 1)
        return T * inner / cpi()


def count_window(field: FieldParams, T, eta, cfg: ToleranceConfig = DEFAULT_CONFIG,
                 statement_constants: bool = False) -> CountWindow:
    with cfg.workdps():
        T = mpf(T)
        if T < 1:
            raise DomainError(f"T must be >= 1, got {T}")
        eta = _check_eta(eta)
        log_disc = field.certified_log_disc(cfg)
        cap = CertifiedReal.exact(STATEMENT_G_CAP) if statement_constants else g_cap(cfg)
        bound = (c1_of_eta(eta, cfg) * (log_disc + field.n_K * clog(T))
                 + c2_of_eta(eta, cfg, statement_constants) * field.n_K + cap)
        return CountWindow(T, main_term(field, T, cfg), bound)


def _bound_value(field, T, cfg):
    def fn(eta):
        return count_window(field, T, eta, cfg).error_bound.value
    return fn


def optimize_eta(field: FieldParams, T, cfg: ToleranceConfig = DEFAULT_CONFIG):
    """Choose eta in [1e-4, 1/2] minimising the window half-width.

    A coarse scan checks unimodality; golden-section refines when it holds,
    otherwise the scan argmin is used. Returns ``(eta, CountWindow)``.
    """
    with cfg.workdps():
        T = mpf(T)
        coarse = ToleranceConfig(working_digits=15)
        xs, ys = scan(_bound_value(field, T, coarse), ETA_MIN, ETA_MAX, ETA_SCAN_POINTS)
        i = min(range(len(ys)), key=ys.__getitem__)
        if is_unimodal(ys):
            lo = xs[max(i - 1, 0)]
            hi = xs[min(i + 1, len(xs) - 1)]
            eta, _ = golden_section_min(_bound_value(field, T, cfg), lo, hi, cfg.root_target)
        else:
            eta = xs[i]
        window = count_window(field, T, eta, cfg)
        edge = count_window(field, T, ETA_MAX, cfg)
        if edge.error_bound.value < window.error_bound.value:
            return ETA_MAX, edge
        return eta, window


def _minkowski_log(n: int) -> mpf:
    """log((pi/4)^n (n^n / n!)^2)."""
    n = mpf(n)
    return n * mp.log(mp.pi / 4) + 2 * (n * mp.log(n) - mp.loggamma(n + 1))


def minkowski_term(n: int, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """n / log((pi/4)^n (n^n/n!)^2), the bound n_K <= C log d_K for degree n."""
    if n < 2:
        raise DomainError("Minkowski's bound applies to n_K >= 2")
    with cfg.workdps():
        v = mpf(n) / _minkowski_log(n)
        return CertifiedReal(v, cfg.rounding_floor(v) * 10)


def minkowski_limit(cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    with cfg.workdps():
        return 1 / (clog(cpi() / 4) + 2)


def minkowski_scan(max_degree: int, cfg: ToleranceConfig = DEFAULT_CONFIG) -> dict:
    """Scan the Minkowski ratio and check the tail is decreasing.

    ``log(n^n/n!)/n`` increases with n, so ``n / log(...)`` decreases once its
    denominator is positive; the scan confirms this on the whole range.
    """
    if max_degree < 2:
        raise DomainError("max_degree must be >= 2")
    with cfg.workdps():
        values = [mpf(n) / _minkowski_log(n) for n in range(2, max_degree + 1)]
        argmax = 2 + max(range(len(values)), key=values.__getitem__)
        decreasing = all(values[i + 1] < values[i] for i in range(len(values) - 1))
        sup = minkowski_term(argmax, cfg)
        return {
            "sup": sup,
            "argmax": argmax,
            "limit": minkowski_limit(cfg),
            "decreasing": decreasing,
        }


def minkowski_c0(max_degree: int, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """sup over 2 <= n <= max_degree of the Minkowski ratio."""
    return minkowski_scan(max_degree, cfg)["sup"]
