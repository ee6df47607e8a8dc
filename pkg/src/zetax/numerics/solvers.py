"""Bracketed root finding and golden-section search."""

from __future__ import annotations

from typing import Callable

from mpmath import mp, mpf


class NoRootError(ArithmeticError):
    """The bracket does not show a sign change."""


def bisect_secant(fn: Callable[[mpf], mpf], lo, hi, tol, bisections: int = 12,
                  max_iter: int = 200) -> mpf:
    """Root of ``fn`` in [lo, hi] given a sign change.

    A fixed number of bisections shrinks the bracket, then secant steps
    (falling back to bisection whenever they leave the bracket) polish it.
    """
    lo, hi, tol = mpf(lo), mpf(hi), mpf(tol)
    flo, fhi = fn(lo), fn(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise NoRootError(f"no sign change on [{mp.nstr(lo, 8)}, {mp.nstr(hi, 8)}]")
    for _ in range(bisections):
        mid = (lo + hi) / 2
        fm = fn(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi, fhi = mid, fm
    x0, f0, x1, f1 = lo, flo, hi, fhi
    force_bisect = False
    for _ in range(max_iter):
        width = hi - lo
        x2 = None
        if not force_bisect and f1 != f0:
            x2 = x1 - f1 * (x1 - x0) / (f1 - f0)
            if not lo < x2 < hi:
                x2 = None
        if x2 is None:
            x2 = (lo + hi) / 2
        f2 = fn(x2)
        if f2 == 0:
            return x2
        if (f2 > 0) == (flo > 0):
            lo, flo = x2, f2
        else:
            hi, fhi = x2, f2
        if abs(x2 - x1) < tol or hi - lo < tol:
            return x2
        # secant creeping along a flat side: bisect next time
        force_bisect = hi - lo > width / 2
        x0, f0, x1, f1 = x1, f1, x2, f2
    raise NoRootError(f"no convergence on [{mp.nstr(lo, 8)}, {mp.nstr(hi, 8)}]")


def golden_section_min(fn: Callable[[mpf], mpf], a, b, tol, max_iter: int = 500):
    """Minimise a unimodal ``fn`` on [a, b]; returns (x, fn(x))."""
    a, b, tol = mpf(a), mpf(b), mpf(tol)
    inv_phi = (mp.sqrt(5) - 1) / 2
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(max_iter):
        if b - a < tol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = fn(d)
    return (c, fc) if fc < fd else (d, fd)


def scan(fn: Callable[[mpf], mpf], a, b, points: int):
    """Evaluate ``fn`` on an evenly spaced grid including both endpoints."""
    a, b = mpf(a), mpf(b)
    xs = [a + (b - a) * i / (points - 1) for i in range(points)]
    return xs, [fn(x) for x in xs]


def is_unimodal(values) -> bool:
    """True if the sequence decreases then increases (weakly)."""
    i = 0
    n = len(values)
    while i + 1 < n and values[i + 1] <= values[i]:
        i += 1
    while i + 1 < n and values[i + 1] >= values[i]:
        i += 1
    return i == n - 1
