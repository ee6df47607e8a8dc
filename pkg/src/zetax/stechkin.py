"""Numeric ingredients of the Stechkin-differenced inequality for -Re zeta_K'/zeta_K.

Differencing the explicit formula at s and at s1 = (1 + sqrt(1 + 4 sigma^2))/2 + it
with weight kappa = 1/sqrt(5) leaves the coefficient phi = (1 - kappa)/2 on
log d_K. What remains is a handful of explicit constants:

* the minimum of g(a0, b0, c0; x) and the perturbation margin around it;
* the digamma differences f_a(sigma, t) and their upper bounds C_a(eps);
* the n_K coefficient assembled from the gamma factors and zeta'/zeta(s1).
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf, mpc

from .numerics import (
    CertifiedReal,
    DomainError,
    ToleranceConfig,
    S_series,
    bisect_secant,
    clog,
    cmax,
    cpi,
    csqrt,
    digamma,
    zeta_log_deriv,
)

DEFAULT_CONFIG = ToleranceConfig()
GRID_HALF_WIDTH = 100
GRID_POINTS = 20001


@dataclass(frozen=True)
class StechkinConstants:
    kappa: mpf
    a0: mpf
    b0: mpf
    c0: mpf
    phi: CertifiedReal


@dataclass(frozen=True)
class GMinimum:
    beta_root: CertifiedReal
    min_value: CertifiedReal
    grid_min: float
    grid_argmin: float


@dataclass(frozen=True)
class GammaBudget:
    f0_11: CertifiedReal
    f1_11: CertifiedReal
    C0_eps: CertifiedReal
    C1_eps: CertifiedReal
    gamma_diff: CertifiedReal
    zeta_term: CertifiedReal
    nk_coeff: CertifiedReal
    additive: CertifiedReal


def _kappa() -> mpf:
    return 1 / mp.sqrt(5)


def stechkin_constants(cfg: ToleranceConfig = DEFAULT_CONFIG) -> StechkinConstants:
    with cfg.workdps():
        root5 = csqrt(5)
        phi = (1 - 1 / root5) / 2
        return StechkinConstants(
            kappa=_kappa(),
            a0=(mp.sqrt(5) - 1) / 2,
            b0=(mp.sqrt(5) + 1) / 2,
            c0=mpf(1),
            phi=phi,
        )


def phi_constant(cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """phi = (1 - 1/sqrt 5)/2."""
    return stechkin_constants(cfg).phi


def g_eval(a, b, c, x) -> mpf:
    """kappa (a/(a^2+x^2) + b/(b^2+x^2)) - c/(c^2+x^2)."""
    a, b, c, x = mpf(a), mpf(b), mpf(c), mpf(x)
    if a <= 0 or b <= 0 or c <= 0:
        raise DomainError("g requires a, b, c > 0")
    x2 = x * x
    return _kappa() * (a / (a * a + x2) + b / (b * b + x2)) - c / (c * c + x2)


def _polymul(p, q):
    out = [mpf(0)] * (len(p) + len(q) - 1)
    for i, u in enumerate(p):
        for j, v in enumerate(q):
            out[i + j] += u * v
    return out


def g_numerator_coefficients(cfg: ToleranceConfig = DEFAULT_CONFIG) -> list[mpf]:
    """Coefficients [A, B, C, D, E] of the numerator of g'(a0, b0, c0; x)/(2x).

    The numerator is A x^8 + B x^6 + C x^4 + D x^2 + E, expanded here as a
    polynomial in u = x^2.
    """
    with cfg.workdps():
        k = stechkin_constants(cfg)

        def sq(v):  # (v^2 + u)^2 as coefficients in u, lowest first
            return _polymul([v * v, mpf(1)], [v * v, mpf(1)])

        t1 = [-k.kappa * k.a0 * co for co in _polymul(sq(k.b0), sq(k.c0))]
        t2 = [-k.kappa * k.b0 * co for co in _polymul(sq(k.a0), sq(k.c0))]
        t3 = [k.c0 * co for co in _polymul(sq(k.a0), sq(k.b0))]
        total = [x + y + z for x, y, z in zip(t1, t2, t3)]
        return list(reversed(total))


def _beta_poly(x):
    return 2 * x ** 6 + 4 * x ** 4 - 1


def g_min(cfg: ToleranceConfig = DEFAULT_CONFIG) -> GMinimum:
    """Positive critical point of g(a0, b0, c0; .) and the minimum value there.

    The root of 2x^6 + 4x^4 - 1 is bracketed in [1/2, 1] and certified by a
    sign change across its radius. A float grid over [-100, 100] confirms the
    interior minimum is global; outside the grid |g| <= 2/x^2 is negligible.
    """
    with cfg.workdps():
        k = stechkin_constants(cfg)
        root = bisect_secant(_beta_poly, mpf(1) / 2, 1, cfg.root_target / 1000)
        rad = cfg.root_target / 100
        if not (_beta_poly(root - rad) < 0 < _beta_poly(root + rad)):
            raise ArithmeticError("failed to certify the critical point")
        beta = CertifiedReal(root, rad)
        # g'(beta*) = 0, so |g(root) - g(beta*)| <= sup|g''| rad^2 / 2
        g2 = k.kappa * (6 / k.a0 ** 3 + 6 / k.b0 ** 3) + 6 / k.c0 ** 3
        gv = g_eval(k.a0, k.b0, k.c0, root)
        value = CertifiedReal(gv, g2 * rad ** 2 / 2 + cfg.rounding_floor(gv))

    kappa, a0, b0 = float(k.kappa), float(k.a0), float(k.b0)
    best, arg = 0.0, 0.0
    step = 2 * GRID_HALF_WIDTH / (GRID_POINTS - 1)
    for i in range(GRID_POINTS):
        x = -GRID_HALF_WIDTH + i * step
        x2 = x * x
        gx = kappa * (a0 / (a0 * a0 + x2) + b0 / (b0 * b0 + x2)) - 1 / (1 + x2)
        if gx < best:
            best, arg = gx, x
    return GMinimum(beta, value, best, arg)


def g_perturb_margin(eps, cfg: ToleranceConfig = DEFAULT_CONFIG, slack=mpf("0.02"),
                     ) -> CertifiedReal:
    """2 (kappa/(a0-s)^2 + kappa/(b0-s)^2 + 1/(c0-s)^2) with s = 2 * 10^-2.

    Multiplied by eps this bounds |g(a,b,c;x) - g(a0,b0,c0;x)| whenever a, b, c
    are within 2 eps of a0, b0, c0; the margin must stay below 5.
    """
    eps = mpf(eps)
    if not 0 < eps <= mpf("0.01"):
        raise DomainError(f"eps must lie in (0, 1e-2], got {eps}")
    with cfg.workdps():
        root5 = csqrt(5)
        kappa = 1 / root5
        a0 = (root5 - 1) / 2
        b0 = (root5 + 1) / 2
        s = mpf(slack)
        return 2 * (kappa / (a0 - s) ** 2 + kappa / (b0 - s) ** 2 + 1 / ((1 - s) ** 2))


def _sigma1(sigma):
    return (1 + mp.sqrt(1 + 4 * sigma * sigma)) / 2


def f_a(a: int, sigma, t, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """(1/2) Re(psi((s+a)/2) - psi((s1+a)/2)/sqrt 5), s = sigma + it."""
    if a not in (0, 1):
        raise DomainError("a must be 0 or 1")
    with cfg.workdps():
        sigma, t = mpf(sigma), mpf(t)
        if sigma < 1:
            raise DomainError(f"f_a requires sigma >= 1, got {sigma}")
        s = mpc(sigma, t)
        s1 = mpc(_sigma1(sigma), t)
        p = digamma((s + a) / 2, cfg).real
        q = digamma((s1 + a) / 2, cfg).real
        return (p - q / csqrt(5)) / 2


def C_a(a: int, eps, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """Upper bound for f_a(sigma, t) over 1 <= sigma <= 1 + eps, |t| <= 1."""
    if a not in (0, 1):
        raise DomainError("a must be 0 or 1")
    with cfg.workdps():
        eps = mpf(eps)
        if eps < 0:
            raise DomainError("eps must be non-negative")
        root5 = csqrt(5)
        first = S_series(mpf(1 + a) / 2, mpf(1) / 2, cfg) / 4
        golden = (1 + root5) / 2
        x2 = (golden + a) / 2
        # S decreases in x, so the hull over the endpoints encloses it
        lo_end = S_series(x2.upper, mpf(1) / 2, cfg)
        hi_end = S_series(x2.lower, mpf(1) / 2, cfg)
        s2 = CertifiedReal.from_bounds(lo_end.lower, hi_end.upper)
        weight = (1 + eps) / (2 * root5 * csqrt(1 + 4 * (1 + eps) ** 2))
        return f_a(a, 1, 1, cfg) + eps * (first + weight * s2)


def q_coefficients(n: int, sigma, a: int) -> tuple[mpf, mpf, mpf]:
    """Coefficients of Q_n(y) = A y^4 + B y^2 + C from the t-monotonicity argument."""
    sigma = mpf(sigma)
    x1 = (sigma + a) / 2
    x2 = (_sigma1(sigma) + a) / 2
    u, v = n + x1, n + x2
    r5 = mp.sqrt(5)
    A = r5 * u - v
    B = 2 * u * v * (r5 * v - u)
    C = u * v * (r5 * v ** 3 - u ** 3)
    return A, B, C


def golden_zeta_term(cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """-(1/sqrt 5) zeta'/zeta((1 + sqrt 5)/2)."""
    with cfg.workdps():
        golden = (1 + mp.sqrt(5)) / 2
        ld = zeta_log_deriv(golden, cfg)
        # (zeta'/zeta)' < 1/(sigma-1)^2 < 3 here; golden itself is off by one ulp
        ld = ld.widen(4 * cfg.rounding_floor(golden))
        return -ld / csqrt(5)


def theorem2_budget(eps=mpf("0.01"), cfg: ToleranceConfig = DEFAULT_CONFIG) -> GammaBudget:
    """Assemble the n_K coefficient and additive constant of the differenced inequality."""
    eps = mpf(eps)
    if not 0 < eps <= mpf("0.01"):
        raise DomainError(f"eps must lie in (0, 1e-2], got {eps}")
    with cfg.workdps():
        f0 = f_a(0, 1, 1, cfg)
        f1 = f_a(1, 1, 1, cfg)
        c0 = C_a(0, eps, cfg)
        c1 = C_a(1, eps, cfg)
        root5 = csqrt(5)
        gamma_diff = -(1 - 1 / root5) * clog(cpi()) / 2 + cmax(c0, (c0 + c1) / 2)
        zeta_term = golden_zeta_term(cfg)
        additive = -g_min(cfg).min_value
        return GammaBudget(f0, f1, c0, c1, gamma_diff, zeta_term, gamma_diff + zeta_term,
                           additive)
