"""Test functions f supported on [0, x0] and their Laplace transforms.

A test function must be non-negative, twice differentiable on (0, x0) with
f(0) >= 0, and its transform F(z) = int_0^x0 f(t) e^(-zt) dt must have
Re F(z) >= 0 on the closed right half-plane. Then

    F(z) = f(0)/z + F0(z),   |F0(z)| <= c(f)/|z|^2,
    c(f) = 3 B(f) x0 + 2 |f(0)| / x0,

with B(f) the supremum of |f''| on (0, x0). Two families are provided: the
triangle f(t) = x0 - t and the self-convolution f = g * g of a truncated
cosine bump.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from mpmath import mp, mpf, mpc

from .numerics import (
    CertifiedComplex,
    CertifiedReal,
    DomainError,
    ToleranceConfig,
    bisect_secant,
    certified_integral,
    monotone,
)

DEFAULT_CONFIG = ToleranceConfig()
TAYLOR_SWITCH = mpf("1e-3")
TAYLOR_TERMS = 10
B_GRID_POINTS = 10_000


@dataclass(frozen=True)
class LaplacePair:
    """A test function on [0, support_x0] bundled with its transform.

    ``kernel`` is an analytic extension of f from [0, x0]; quadrature samples
    it at complex points. ``transform`` is an optional closed form for F.
    """

    support_x0: mpf
    f0: mpf
    B_f: mpf
    kernel: Callable
    kernel_d1: Callable
    kernel_d2: Callable
    transform: Optional[Callable] = None
    F0_closed: Optional[mpf] = None
    name: str = "custom"
    cfg: ToleranceConfig = field(default=DEFAULT_CONFIG, compare=False)

    @property
    def c_f(self) -> mpf:
        return 3 * self.B_f * self.support_x0 + 2 * abs(self.f0) / self.support_x0

    def f_at(self, t):
        with self.cfg.workdps():
            t = mpf(t)
            if t < 0 or t >= self.support_x0:
                return mpf(0)
            return self.kernel(t)

    def F_at(self, z):
        with self.cfg.workdps():
            z = mpc(z)
            if self.transform is not None:
                return self.transform(z)
            return laplace_eval(self, z, self.cfg).value

    def F_certified(self, z) -> CertifiedComplex:
        """F(z) with an error radius; closed forms get a rounding allowance."""
        with self.cfg.workdps():
            z = mpc(z)
            if self.transform is None:
                return laplace_eval(self, z, self.cfg)
            value = self.transform(z)
            # terms are at most sup|f| x0 e^(max(-Re z, 0) x0) before cancellation,
            # and the 1/z^2 forms lose up to 1/|z|^2 of that to cancellation
            x0 = self.support_x0
            scale = (abs(self.f0) + self.B_f * x0 ** 2 + 1) * (1 + x0) ** 3 \
                * mp.exp(max(-z.real, 0) * x0) * (1 + abs(z)) ** 2 \
                * max(1, 1 / max(abs(z), mp.eps) ** 2)
            return CertifiedComplex.from_value(value, self.cfg.rounding_floor(scale) * 100)

    def F0_of(self, z):
        with self.cfg.workdps():
            z = mpc(z)
            if z == 0:
                raise DomainError("F0 is not defined at z = 0")
            return self.F_at(z) - self.f0 / z

    def F_zero(self) -> mpf:
        if self.F0_closed is not None:
            return self.F0_closed
        return laplace_eval(self, 0, self.cfg).real.value


def _triangle_transform(x0: mpf):
    def F(z):
        z = mpc(z)
        if abs(z) < TAYLOR_SWITCH:
            # F(z) = sum_k (-z)^k x0^(k+2) / (k+2)!
            return mp.fsum((-z) ** k * x0 ** (k + 2) / mp.factorial(k + 2)
                           for k in range(TAYLOR_TERMS))
        return (mp.exp(-x0 * z) + x0 * z - 1) / (z * z)
    return F


def _linear_exp_integral(alpha, beta, w, x0):
    """int_0^x0 (alpha + beta t) e^(wt) dt."""
    u = w * x0
    if abs(u) < mpf(1) / 4:
        # termwise: int_0^x0 t^k e^(wt) dt = sum_m w^m x0^(m+k+1) / (m! (m+k+1))
        total, term, m = mpc(0), mpc(1), 0
        eps = mp.eps
        while True:
            piece = term * (alpha * x0 / (m + 1) + beta * x0 * x0 / (m + 2))
            total += piece
            if abs(piece) < eps * (abs(total) + eps) and m > 2:
                return total
            m += 1
            term *= u / m
    e = mp.exp(u)
    return alpha * (e - 1) / w + beta * (e * (u - 1) + 1) / (w * w)


def _exp_poly_transform(terms, x0):
    """F for f(t) = sum (alpha + beta t) e^(omega t) on [0, x0]."""
    def F(z):
        z = mpc(z)
        return mp.fsum(_linear_exp_integral(a, b, om - z, x0) for a, b, om in terms)
    return F


def triangular_pair(x0, cfg: ToleranceConfig = DEFAULT_CONFIG) -> LaplacePair:
    """f(t) = x0 - t on [0, x0]: B(f) = 0, c(f) = 2 x0, F(0) = x0^2/2."""
    with cfg.workdps():
        x0 = mpf(x0)
        if x0 <= 0:
            raise DomainError(f"x0 must be positive, got {x0}")
        return LaplacePair(
            support_x0=x0,
            f0=x0,
            B_f=mpf(0),
            kernel=lambda t: x0 - t,
            kernel_d1=lambda t: mpf(-1),
            kernel_d2=lambda t: mpf(0),
            transform=_triangle_transform(x0),
            F0_closed=x0 * x0 / 2,
            name=f"triangle(x0={mp.nstr(x0, 8)})",
            cfg=cfg,
        )


def laplace_eval(pair: LaplacePair, z, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedComplex:
    """Certified int_0^x0 f(t) e^(-zt) dt for any complex z."""
    with cfg.workdps():
        z = mpc(z)
        return certified_integral(lambda t: pair.kernel(t) * mp.exp(-z * t), 0,
                                  pair.support_x0, cfg)


def _theta_equation(x):
    return mp.sin(x) ** 2 - mpf(3) / 2 * (1 - x * mp.cot(x))


def hb_theta(cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """Root in (0, pi/2) of sin^2(x) = (3/2)(1 - x cot x).

    Near 0 the left side minus the right is x^2/2 + O(x^4) > 0, and at pi/2
    it is -1/2, so [1/10, pi/2] brackets the root.
    """
    with cfg.workdps():
        lo, hi = mpf(1) / 10, mp.pi / 2
        if not (_theta_equation(lo) > 0 > _theta_equation(hi)):
            raise ArithmeticError("theta bracket lost its sign change")
        root = bisect_secant(_theta_equation, lo, hi, cfg.root_target / 1000)
        rad = cfg.root_target / 100
        if not (_theta_equation(root - rad) > 0 > _theta_equation(root + rad)):
            raise ArithmeticError("failed to certify theta")
        return CertifiedReal(root, rad)


@dataclass(frozen=True)
class HeathBrownParams:
    lam: mpf
    theta: CertifiedReal
    zeta_param: mpf
    half_support: mpf
    f0: CertifiedReal
    F0_value: CertifiedReal


def _hb_kernels(lam, theta, zeta, d):
    A = lam * (1 + mp.tan(theta) ** 2)
    s1, s2 = mp.sin(theta), mp.sin(2 * theta)

    def f(t):
        return A * (A * (d - t / 2) * mp.cos(zeta * t) + lam * (2 * d - t)
                    + mp.sin(2 * theta - zeta * t) / s2
                    - 2 * (1 + mp.sin(theta - zeta * t) / s1))

    def f1(t):
        return A * (A * (-mp.cos(zeta * t) / 2 - zeta * (d - t / 2) * mp.sin(zeta * t))
                    - lam - zeta * mp.cos(2 * theta - zeta * t) / s2
                    + 2 * zeta * mp.cos(theta - zeta * t) / s1)

    def f2(t):
        return A * (A * (zeta * mp.sin(zeta * t) - zeta ** 2 * (d - t / 2) * mp.cos(zeta * t))
                    - zeta ** 2 * mp.sin(2 * theta - zeta * t) / s2
                    + 2 * zeta ** 2 * mp.sin(theta - zeta * t) / s1)

    i = mpc(0, 1)
    iz = i * zeta
    # the same f written as sum (alpha + beta t) e^(omega t), omega in {0, +-i zeta}
    c_minus = A * mp.expj(2 * theta) / (2 * i * s2) - A * mp.expj(theta) / (i * s1)
    c_plus = -A * mp.expj(-2 * theta) / (2 * i * s2) + A * mp.expj(-theta) / (i * s1)
    terms = [
        (A * A * d / 2 + c_plus, -A * A / 4, iz),
        (A * A * d / 2 + c_minus, -A * A / 4, -iz),
        (2 * A * lam * d - 2 * A, -A * lam, mpc(0)),
    ]
    return A, f, f1, f2, terms


def _hb_second_derivative_bound(lam, theta, zeta, d) -> mpf:
    """Max of |f''| over a uniform grid plus a Lipschitz allowance from |f'''|."""
    lam, theta, zeta, d = float(lam), float(theta), float(zeta), float(d)
    A = lam * (1 + math.tan(theta) ** 2)
    s1, s2 = math.sin(theta), math.sin(2 * theta)
    x0 = 2 * d
    step = x0 / (B_GRID_POINTS - 1)
    best2 = best3 = 0.0
    for i in range(B_GRID_POINTS):
        t = i * step
        zt = zeta * t
        f2 = A * (A * (zeta * math.sin(zt) - zeta ** 2 * (d - t / 2) * math.cos(zt))
                  - zeta ** 2 * math.sin(2 * theta - zt) / s2
                  + 2 * zeta ** 2 * math.sin(theta - zt) / s1)
        f3 = A * (A * (1.5 * zeta ** 2 * math.cos(zt) + zeta ** 3 * (d - t / 2) * math.sin(zt))
                  + zeta ** 3 * math.cos(2 * theta - zt) / s2
                  - 2 * zeta ** 3 * math.cos(theta - zt) / s1)
        best2 = max(best2, abs(f2))
        best3 = max(best3, abs(f3))
    # double the f''' sample to cover its own grid error, then add relative slack
    return mpf((best2 + 2 * best3 * step / 2) * (1 + 1e-9))


def hb_pair(lam, cfg: ToleranceConfig = DEFAULT_CONFIG) -> tuple[HeathBrownParams, LaplacePair]:
    """The self-convolution f = g * g, g(t) = lam sec^2(theta)(cos(zeta t) - cos theta) on |t| <= d.

    Here zeta = lam tan(theta) and d = theta/zeta, so f lives on [0, 2d]. The
    pair is built at the midpoint of the certified theta.
    """
    with cfg.workdps():
        lam = mpf(lam)
        if lam <= 0:
            raise DomainError(f"lambda must be positive, got {lam}")
        theta = hb_theta(cfg)
        th = theta.value
        zeta = lam * mp.tan(th)
        d = th / zeta
        A, f, f1, f2, terms = _hb_kernels(lam, th, zeta, d)

        tan_c = monotone(mp.tan, theta)
        sec2 = 1 + tan_c * tan_c
        cot_c = 1 / tan_c
        f0 = lam * sec2 * (theta * tan_c + 3 * theta * cot_c - 3)
        F0 = 2 * sec2 * (1 - theta * cot_c) ** 2

        params = HeathBrownParams(lam, theta, zeta, d, f0, F0)
        pair = LaplacePair(
            support_x0=2 * d,
            f0=f0.value,
            B_f=_hb_second_derivative_bound(lam, th, zeta, d),
            kernel=f,
            kernel_d1=f1,
            kernel_d2=f2,
            transform=_exp_poly_transform(terms, 2 * d),
            F0_closed=F0.value,
            name=f"hb(lambda={mp.nstr(lam, 6)})",
            cfg=cfg,
        )
        return params, pair


def hb_support(lam, cfg: ToleranceConfig = DEFAULT_CONFIG) -> CertifiedReal:
    """x0 = 2 theta / (lam tan theta)."""
    with cfg.workdps():
        theta = hb_theta(cfg)
        return 2 * theta / (mpf(lam) * monotone(mp.tan, theta))


@dataclass(frozen=True)
class GridSpec:
    support_points: int = 200
    z_points: tuple = ()


def default_z_grid(n: int = 1000, radius_max: float = 50.0) -> tuple:
    """Deterministic points in Re z >= 0: a spiral of moduli in [1/2, radius_max]."""
    pts = []
    for k in range(n):
        r = 0.5 + (radius_max - 0.5) * (k / max(n - 1, 1)) ** 2
        ang = -math.pi / 2 + math.pi * ((k * 0.618033988749895) % 1.0)
        pts.append(complex(r * math.cos(ang), r * math.sin(ang)))
    return tuple(pts)


@dataclass
class CheckResult:
    name: str
    passed: bool
    worst: float
    witness: object = None


@dataclass
class ConditionReport:
    pair: str
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def condition_check(pair: LaplacePair, grid: GridSpec = GridSpec(),
                    cfg: ToleranceConfig = DEFAULT_CONFIG) -> ConditionReport:
    """Grid verification of positivity, f(0) >= 0, Re F >= 0 and the F0 bound.

    Failures are reported, never raised.
    """
    z_points = grid.z_points or default_z_grid(200)
    if grid.support_points < 2 or not z_points:
        raise DomainError("grid must be nonempty")
    with cfg.workdps():
        tol = cfg.quadrature_target * 100
        checks = []
        x0 = pair.support_x0
        worst, wit = mpf("inf"), None
        for i in range(grid.support_points):
            t = x0 * i / (grid.support_points - 1)
            v = pair.kernel(t)
            if v < worst:
                worst, wit = v, t
        checks.append(CheckResult("f >= 0 on support", worst >= -tol, float(worst), float(wit)))
        checks.append(CheckResult("f(0) >= 0", pair.f0 >= 0, float(pair.f0), 0.0))

        worst_re, wit_re = mpf("inf"), None
        worst_gap, wit_gap = mpf("-inf"), None
        for z in z_points:
            z = mpc(z)
            if z.real < 0:
                raise DomainError("z grid must lie in Re z >= 0")
            if pair.transform is not None:
                cF = pair.F_certified(z)
                F, rad = cF.value, cF.radius
            else:
                cF = laplace_eval(pair, z, cfg)
                F, rad = cF.value, cF.radius
            # widen against the check so a pass is certified
            if F.real - rad < worst_re:
                worst_re, wit_re = F.real - rad, complex(z)
            if z != 0:
                gap = abs(F - pair.f0 / z) + rad - pair.c_f / abs(z) ** 2
                if gap > worst_gap:
                    worst_gap, wit_gap = gap, complex(z)
        checks.append(CheckResult("Re F >= 0", worst_re >= -tol, float(worst_re), wit_re))
        checks.append(CheckResult("|F - f(0)/z| <= c(f)/|z|^2", worst_gap <= 0,
                                  float(worst_gap), wit_gap))
        return ConditionReport(pair.name, checks)
