"""Gauss-Legendre quadrature with an a-priori error bound.

For an integrand analytic inside the Bernstein ellipse E_rho of [a, b] and
bounded there by M, the (n+1)-point Gauss-Legendre rule I_n satisfies

    |I - I_n| <= (b - a)/2 * 64 M / (15 (rho^2 - 1) rho^(2n)).

M is estimated by sampling the integrand on the ellipse boundary and
inflating the maximum; the rule size is then chosen so the bound meets the
target. Sampling cannot see a pole inside the ellipse, so each rule is
cross-checked against the half-size rule: if the two differ by more than
their combined bounds the ellipse is rejected and a smaller one is tried.
Intervals whose required rule is too large are halved.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

from mpmath import mp, mpf, mpc

from .certified import CertifiedComplex, ToleranceConfig

RHO_CANDIDATES = (2, 4, 8, 16)
ELLIPSE_SAMPLES = 48
SAMPLE_INFLATION = 2
MAX_NODES = 192


@lru_cache(maxsize=None)
def gauss_legendre_nodes(n: int, dps: int):
    """Nodes and weights of the n-point rule on [-1, 1] at ``dps`` digits."""
    with mp.workdps(dps + 5):
        nodes, weights = [], []
        for i in range(1, (n + 1) // 2 + 1):
            x = mp.cos(mp.pi * (i - mpf(1) / 4) / (n + mpf(1) / 2))
            for _ in range(100):
                p0, p1 = mpf(1), x
                for k in range(2, n + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) < mpf(10) ** (-(dps + 3)):
                    break
            p0, p1 = mpf(1), x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            nodes.extend([-x, x])
            weights.extend([w, w])
        if n % 2:
            # the middle node was added twice
            nodes.pop()
            weights.pop()
        return tuple(nodes), tuple(weights)


def _ellipse_max(fn, mid, half, rho) -> mpf:
    best = mpf(0)
    a = (rho + mpf(1) / rho) / 2
    b = (rho - mpf(1) / rho) / 2
    for j in range(ELLIPSE_SAMPLES):
        phi = 2 * mp.pi * j / ELLIPSE_SAMPLES
        u = mpc(a * mp.cos(phi), b * mp.sin(phi))
        best = max(best, abs(fn(mid + half * u)))
    return best * SAMPLE_INFLATION


def _plan(fn, mid, half, target, candidates=RHO_CANDIDATES):
    """Cheapest (rho, n, bound, const) meeting ``target``, or None."""
    best = None
    for rho in candidates:
        rho = mpf(rho)
        M = _ellipse_max(fn, mid, half, rho)
        if M == 0:
            return rho, 8, mpf(0), mpf(0)
        const = abs(half) * 64 * M / (15 * (rho ** 2 - 1))
        n = int(mp.ceil(mp.log(const / target) / (2 * mp.log(rho)))) + 1
        n = max(8, 8 * ((n + 7) // 8))
        if n <= MAX_NODES and (best is None or n < best[1]):
            bound = const / rho ** (2 * (n - 1))
            best = (rho, n, bound, const)
        elif best is not None:
            # larger ellipses only pay off while the rule keeps shrinking
            break
    return best


def _rule(fn, mid, half, n, dps):
    nodes, weights = gauss_legendre_nodes(n, dps)
    return half * mp.fsum((w * fn(mid + half * x) for x, w in zip(nodes, weights)))


def integrate(fn: Callable, a, b, cfg: ToleranceConfig, target=None, depth: int = 0):
    """Integrate an analytic ``fn`` over [a, b]; returns (value, error bound).

    ``fn`` must accept complex arguments (it is sampled off the real axis).
    """
    target = cfg.quadrature_target if target is None else mpf(target)
    a, b = mpf(a), mpf(b)
    mid, half = (a + b) / 2, (b - a) / 2
    candidates = RHO_CANDIDATES
    while candidates:
        plan = _plan(fn, mid, half, target, candidates)
        if plan is None:
            break
        rho, n, bound, const = plan
        value = _rule(fn, mid, half, n, cfg.dps)
        if const == 0:
            return value, bound
        coarse = _rule(fn, mid, half, n // 2, cfg.dps)
        coarse_bound = const / rho ** (n - 2)
        if abs(value - coarse) <= 2 * (bound + coarse_bound) + cfg.rounding_floor(abs(value)):
            return value, bound
        # something singular lives inside this ellipse
        candidates = tuple(r for r in candidates if r < rho)
    if depth > 30:
        raise ArithmeticError("quadrature failed to meet its target")
    v1, e1 = integrate(fn, a, mid, cfg, target / 2, depth + 1)
    v2, e2 = integrate(fn, mid, b, cfg, target / 2, depth + 1)
    return v1 + v2, e1 + e2


def certified_integral(fn: Callable, a, b, cfg: ToleranceConfig) -> CertifiedComplex:
    with cfg.workdps():
        value, err = integrate(fn, a, b, cfg)
        err += cfg.rounding_floor(abs(value))
        return CertifiedComplex.from_value(value, err)
