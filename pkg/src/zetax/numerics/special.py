"""Certified evaluations of zeta(sigma), zeta'/zeta(sigma), psi(z) and related sums.

All tails are bounded analytically:

* zeta and its derivative through Euler-Maclaurin summation, with the
  remainder controlled by ``|B_2M| / (2M)!`` times the integral of the
  ``2M``-th derivative;
* psi through the recurrence ``psi(z) = psi(z + m) - sum 1/(z + j)`` and the
  asymptotic series at ``Re(w) >= X``, whose remainder is bounded by the first
  omitted term evaluated at ``Re(w)``;
* ``S(x, y) = sum_{n>=0} 1/((x+n)^2 + y^2)`` by Euler-Maclaurin using
  ``|f^(m)(t)| <= (m+1)! / t^(m+2)`` for ``f(t) = 1/(t^2 + y^2)``.
"""

from __future__ import annotations

from functools import lru_cache

from mpmath import mp, mpf, mpc

from .certified import (
    CertifiedComplex,
    CertifiedReal,
    DomainError,
    ToleranceConfig,
)

DEFAULT_CONFIG = ToleranceConfig()


@lru_cache(maxsize=None)
def _bernoulli_over_factorial(k2: int, dps: int) -> mpf:
    with mp.workdps(dps):
        return mp.bernoulli(k2) / mp.factorial(k2)


def _em_zeta(s: mpf, cfg: ToleranceConfig, derivative: bool):
    """Euler-Maclaurin value and rigorous remainder for zeta(s) or zeta'(s)."""
    target = cfg.quadrature_target / 100
    n_cut = max(20, cfg.working_digits)
    N = mpf(n_cut)
    logN = mp.log(N)
    if derivative:
        head = -mp.fsum(mp.log(n) * mpf(n) ** (-s) for n in range(2, n_cut))
        tail = -N ** (1 - s) * (logN / (s - 1) + 1 / (s - 1) ** 2) - logN * N ** (-s) / 2
    else:
        head = mp.fsum(mpf(n) ** (-s) for n in range(1, n_cut))
        tail = N ** (1 - s) / (s - 1) + N ** (-s) / 2

    rising = s  # (s)_{2k-1}
    harmonic = 1 / s  # sum_{j < 2k-1} 1/(s + j)
    total = head + tail
    for k in range(1, 4 * cfg.dps):
        c = _bernoulli_over_factorial(2 * k, cfg.dps)
        power = N ** (-s - 2 * k + 1)
        if derivative:
            total += c * rising * power * (harmonic - logN)
        else:
            total += c * rising * power
        # advance to (s)_{2k}; remainder after k correction terms uses B_{2k}
        rising_2k = rising * (s + 2 * k - 1)
        harmonic_2k = harmonic + 1 / (s + 2 * k - 1)
        a = s + 2 * k
        i0 = N ** (1 - a) / (a - 1)
        if derivative:
            i1 = N ** (1 - a) * (logN / (a - 1) + 1 / (a - 1) ** 2)
            bound = abs(c) * rising_2k * (harmonic_2k * i0 + i1)
        else:
            bound = abs(c) * rising_2k * i0
        if bound < target:
            return total, bound
        rising = rising_2k * (s + 2 * k)
        harmonic = harmonic_2k + 1 / (s + 2 * k)
    raise ArithmeticError("Euler-Maclaurin remainder did not reach the target")


def zeta_real(sigma, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """Certified Riemann zeta at a real point ``sigma > 1``."""
    with cfg.workdps():
        s = mpf(sigma)
        if s <= 1:
            raise DomainError(f"zeta_real requires sigma > 1, got {sigma}")
        value, err = _em_zeta(s, cfg, derivative=False)
        return CertifiedReal(value, err + cfg.rounding_floor(value))


def zeta_deriv_real(sigma, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """Certified zeta'(sigma) for real ``sigma > 1``."""
    with cfg.workdps():
        s = mpf(sigma)
        if s <= 1:
            raise DomainError(f"zeta_deriv_real requires sigma > 1, got {sigma}")
        value, err = _em_zeta(s, cfg, derivative=True)
        return CertifiedReal(value, err + cfg.rounding_floor(value))


def zeta_log_deriv(sigma, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """Certified zeta'(sigma)/zeta(sigma) for real ``sigma > 1``."""
    with cfg.workdps():
        if mpf(sigma) <= 1:
            raise DomainError(f"zeta_log_deriv requires sigma > 1, got {sigma}")
        out = zeta_deriv_real(sigma, cfg) / zeta_real(sigma, cfg)
        return out.widen(cfg.rounding_floor(out.value))


def _shift_threshold(cfg: ToleranceConfig) -> mpf:
    # the asymptotic series reaches ~exp(-2 pi X); X below gives 10^-(dps+5)
    return mpf(0.4) * (cfg.dps + 5) + 5


def digamma(z, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedComplex:
    """Certified psi(z) = Gamma'(z)/Gamma(z) for complex ``z`` off the poles."""
    with cfg.workdps():
        z = mpc(z)
        if z.imag == 0 and z.real <= 0 and z.real == int(z.real):
            raise DomainError(f"digamma has a pole at {z.real}")
        X = _shift_threshold(cfg)
        shift = mpc(0)
        w = z
        while w.real < X:
            shift += 1 / w
            w += 1
        target = cfg.quadrature_target / 100
        inv_w2 = 1 / (w * w)
        series = mp.log(w) - 1 / (2 * w)
        power = inv_w2
        re_w = w.real
        for k in range(1, 4 * cfg.dps):
            series -= mp.bernoulli(2 * k) / (2 * k) * power
            power *= inv_w2
            bound = abs(mp.bernoulli(2 * k + 2)) / ((2 * k + 2) * re_w ** (2 * k + 2))
            if bound < target:
                break
        else:
            raise ArithmeticError("digamma asymptotic series did not reach the target")
        value = series - shift
        err = bound + cfg.rounding_floor(abs(value) + abs(shift))
        return CertifiedComplex.from_value(value, err)


def _s_derivative(m: int, t: mpf, y: mpf) -> mpf:
    """m-th derivative of 1/(t^2 + y^2)."""
    if y == 0:
        return (-1) ** m * mp.factorial(m + 1) / t ** (m + 2)
    return (-1) ** m * mp.factorial(m) * (mpc(t, -y) ** (-(m + 1))).imag / y


def S_series(x, y, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """Certified ``sum_{n>=0} 1/((x+n)^2 + y^2)`` for ``x > 0``.

    The sum decreases as ``x`` grows and satisfies ``S(x, 0) = psi'(x)``.
    """
    with cfg.workdps():
        x, y = mpf(x), abs(mpf(y))
        if x <= 0:
            raise DomainError(f"S_series requires x > 0, got {x}")
        n_cut = max(30, cfg.working_digits)
        head = mp.fsum(1 / ((x + n) ** 2 + y ** 2) for n in range(n_cut))
        t = x + n_cut
        if y == 0:
            integral = 1 / t
        else:
            integral = mp.atan(y / t) / y
        tail = integral + 1 / (t ** 2 + y ** 2) / 2
        target = cfg.quadrature_target / 100
        for k in range(1, 4 * cfg.dps):
            tail -= _bernoulli_over_factorial(2 * k, cfg.dps) * _s_derivative(2 * k - 1, t, y)
            bound = abs(mp.bernoulli(2 * k)) / t ** (2 * k + 1)
            if bound < target:
                break
        else:
            raise ArithmeticError("S_series remainder did not reach the target")
        value = head + tail
        return CertifiedReal(value, bound + cfg.rounding_floor(value))


def stirling_deviation(T, which: str = "half-arg",
                       cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """Right-hand side of the Stirling deviation bound for Im log Gamma.

    ``half-arg`` bounds ``|Im log Gamma(1/4 + iT/2) - (T/2) log(T/(2e))|``,
    ``full-arg`` bounds ``|Im log Gamma(1/2 + iT) - T log(T/e)|``.
    """
    if which not in ("half-arg", "full-arg"):
        raise ValueError(f"which must be 'half-arg' or 'full-arg', got {which!r}")
    with cfg.workdps():
        T = mpf(T)
        if T < 1:
            raise DomainError(f"stirling_deviation requires T >= 1, got {T}")
        log_term = mp.log(1 + 1 / (4 * T ** 2))
        root = mp.sqrt(mpf(1) / 4 + T ** 2)
        if which == "half-arg":
            value = T / 4 * log_term + mp.atan(2 * T) / 4 + 1 / (3 * root)
        else:
            value = T / 2 * log_term + 1 / (6 * root)
        return CertifiedReal(value, cfg.rounding_floor(value))
