"""Real numbers carried together with an absolute error radius.

Error propagation is first-order interval style: every operation returns a
midpoint and a radius that bounds the distance to the exact result, plus a
small rounding allowance proportional to the working precision. This is not
directed-rounding interval arithmetic; the radii are honest bounds provided
every input radius is.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, NamedTuple, Union

from mpmath import mp, mpf

GUARD_DIGITS = 10

Number = Union[int, float, mpf]


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def _ten_to(k: int) -> mpf:
    return mpf(10) ** k


@dataclass(frozen=True)
class ToleranceConfig:
    """Working precision and numeric targets shared by all certified routines.

    ``quadrature_target`` and ``root_target`` default to values tied to
    ``working_digits`` so that doubling the precision tightens every radius.
    ``epsilon`` and ``delta`` are the small parameters of the explicit
    formula; they must satisfy ``0 < epsilon <= 1e-2`` and ``0 < delta < 1``.
    """

    working_digits: int = 30
    quadrature_target: mpf | None = None
    root_target: mpf | None = None
    epsilon: float = 1e-2
    delta: float = 1e-6
    _dps: int = field(init=False, repr=False, compare=False, default=0)

    def __post_init__(self):
        if int(self.working_digits) != self.working_digits or self.working_digits < 15:
            raise DomainError(f"working_digits must be an integer >= 15, got {self.working_digits}")
        if not 0 < self.epsilon <= 1e-2:
            raise DomainError(f"epsilon must lie in (0, 1e-2], got {self.epsilon}")
        if not 0 < self.delta < 1:
            raise DomainError(f"delta must lie in (0, 1), got {self.delta}")
        dps = self.working_digits + GUARD_DIGITS
        object.__setattr__(self, "_dps", dps)
        with mp.workdps(dps):
            if self.quadrature_target is None:
                object.__setattr__(self, "quadrature_target", _ten_to(-(self.working_digits - 3)))
            else:
                object.__setattr__(self, "quadrature_target", mpf(self.quadrature_target))
            if self.root_target is None:
                object.__setattr__(self, "root_target", _ten_to(-(self.working_digits - 8)))
            else:
                object.__setattr__(self, "root_target", mpf(self.root_target))
        if self.quadrature_target <= 0 or self.root_target <= 0:
            raise DomainError("numeric targets must be positive")

    @property
    def dps(self) -> int:
        """Decimal digits used internally (working digits plus guard digits)."""
        return self._dps

    def workdps(self):
        return mp.workdps(self._dps)

    def rounding_floor(self, scale: Number = 1) -> mpf:
        """Allowance for accumulated rounding at this precision."""
        return (abs(mpf(scale)) + 1) * _ten_to(-(self.working_digits + 3))

    def doubled(self) -> "ToleranceConfig":
        return replace(self, working_digits=2 * self.working_digits,
                       quadrature_target=None, root_target=None)


def _slack(value: mpf, radius: mpf = 0) -> mpf:
    # rounding of the midpoint and of the radius formula itself
    return abs(value) * mp.eps * 8 + abs(radius) * mp.eps * 8 + mp.eps ** 2


def _as_mpf(x) -> mpf:
    if isinstance(x, CertifiedReal):
        raise TypeError("expected a plain number")
    return mpf(x)


@dataclass(frozen=True)
class CertifiedReal:
    """A real number ``value`` whose exact counterpart lies within ``radius``."""

    value: mpf
    radius: mpf = mpf(0)

    def __post_init__(self):
        object.__setattr__(self, "value", mpf(self.value))
        object.__setattr__(self, "radius", mpf(self.radius))
        if self.radius < 0:
            raise ValueError(f"radius must be non-negative, got {self.radius}")

    @classmethod
    def exact(cls, x: Number) -> "CertifiedReal":
        return cls(mpf(x), mpf(0))

    @classmethod
    def from_bounds(cls, lo: Number, hi: Number) -> "CertifiedReal":
        lo, hi = mpf(lo), mpf(hi)
        if lo > hi:
            lo, hi = hi, lo
        r = (hi - lo) / 2
        return cls((lo + hi) / 2, r + _slack((lo + hi) / 2, r))

    @property
    def lower(self) -> mpf:
        return self.value - self.radius

    @property
    def upper(self) -> mpf:
        return self.value + self.radius

    def contains(self, other: "CertifiedReal | Number") -> bool:
        """True if ``other`` (a point or an interval) lies inside this interval."""
        if isinstance(other, CertifiedReal):
            return self.lower <= other.lower and other.upper <= self.upper
        x = mpf(other)
        return self.lower <= x <= self.upper

    __contains__ = contains

    def certainly_lt(self, x: Number) -> bool:
        return self.upper < x

    def certainly_le(self, x: Number) -> bool:
        return self.upper <= x

    def certainly_gt(self, x: Number) -> bool:
        return self.lower > x

    def certainly_ge(self, x: Number) -> bool:
        return self.lower >= x

    def widen(self, extra: Number) -> "CertifiedReal":
        return CertifiedReal(self.value, self.radius + abs(mpf(extra)))

    def _lift(self, other) -> "CertifiedReal":
        return other if isinstance(other, CertifiedReal) else CertifiedReal(_as_mpf(other))

    def __neg__(self):
        return CertifiedReal(-self.value, self.radius)

    def __abs__(self):
        if self.lower >= 0:
            return self
        if self.upper <= 0:
            return -self
        hi = max(-self.lower, self.upper)
        return CertifiedReal(hi / 2, hi / 2)

    def __add__(self, other):
        o = self._lift(other)
        v = self.value + o.value
        r = self.radius + o.radius
        return CertifiedReal(v, r + _slack(v, r))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        v = self.value - o.value
        r = self.radius + o.radius
        return CertifiedReal(v, r + _slack(v, r))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        v = self.value * o.value
        r = abs(self.value) * o.radius + abs(o.value) * self.radius + self.radius * o.radius
        return CertifiedReal(v, r + _slack(v, r))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if abs(o.value) <= o.radius:
            raise ZeroDivisionError("divisor interval contains zero")
        v = self.value / o.value
        r = (abs(self.value) * o.radius + abs(o.value) * self.radius) / (
            abs(o.value) * (abs(o.value) - o.radius))
        return CertifiedReal(v, r + _slack(v, r))

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise TypeError("only non-negative integer powers are supported")
        out = CertifiedReal.exact(1)
        for _ in range(k):
            out = out * self
        return out

    def __float__(self):
        return float(self.value)

    def __str__(self):
        return f"{mp.nstr(self.value, 15)} ± {mp.nstr(self.radius, 3)}"

    def to_dict(self, digits: int = 20) -> dict:
        return {"value": mp.nstr(self.value, digits), "radius": mp.nstr(self.radius, 3)}


def monotone(fn: Callable[[mpf], mpf], x: CertifiedReal | Number) -> CertifiedReal:
    """Enclose ``fn(x)`` for ``fn`` monotone on ``[x.lower, x.upper]``."""
    if not isinstance(x, CertifiedReal):
        v = fn(mpf(x))
        return CertifiedReal(v, _slack(v) * 4)
    if x.radius == 0:
        v = fn(x.value)
        return CertifiedReal(v, _slack(v) * 4)
    a, b = fn(x.lower), fn(x.upper)
    out = CertifiedReal.from_bounds(a, b)
    return out.widen(_slack(out.value) * 4)


def clog(x):
    lo = x.lower if isinstance(x, CertifiedReal) else mpf(x)
    if lo <= 0:
        raise DomainError("log of a non-positive interval")
    return monotone(mp.log, x)


def cexp(x):
    return monotone(mp.exp, x)


def csqrt(x):
    lo = x.lower if isinstance(x, CertifiedReal) else mpf(x)
    if lo < 0:
        raise DomainError("sqrt of a negative interval")
    return monotone(mp.sqrt, x)


def catan(x):
    return monotone(mp.atan, x)


def cmax(*xs: CertifiedReal) -> CertifiedReal:
    """Enclosure of the maximum of several enclosed reals."""
    lo = max(x.lower for x in xs)
    hi = max(x.upper for x in xs)
    return CertifiedReal.from_bounds(lo, hi)


def cpi() -> CertifiedReal:
    return CertifiedReal(+mp.pi, _slack(mp.pi) * 2)


def cconst(value: mpf) -> CertifiedReal:
    """Wrap a correctly rounded library constant (pi, log 2, ...)."""
    return CertifiedReal(+value, _slack(value) * 2)


class CertifiedComplex(NamedTuple):
    real: CertifiedReal
    imag: CertifiedReal

    @property
    def value(self):
        return mp.mpc(self.real.value, self.imag.value)

    @property
    def radius(self) -> mpf:
        """Bound on the modulus of the error."""
        return self.real.radius + self.imag.radius

    def contains(self, other: "CertifiedComplex") -> bool:
        return self.real.contains(other.real) and self.imag.contains(other.imag)

    @classmethod
    def from_value(cls, z, radius) -> "CertifiedComplex":
        z = mp.mpc(z)
        return cls(CertifiedReal(z.real, radius), CertifiedReal(z.imag, radius))
