"""Empirical check of the zero-counting window against a dataset."""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from mpmath import mpf

from ..numerics import DomainError, ToleranceConfig
from ..zerocount import CountWindow, count_window, optimize_eta
from .loader import ZeroDataset

DEFAULT_CONFIG = ToleranceConfig()


def count_zeros(ds: ZeroDataset, T) -> int:
    """N_K(T) = #{zeros with |gamma| <= T}: twice the positive ordinates plus real ones."""
    T = float(T)
    if T > ds.completeness_height:
        raise DomainError(f"T = {T} exceeds the completeness height {ds.completeness_height}")
    if T < 0:
        raise DomainError("T must be non-negative")
    return 2 * bisect.bisect_right(ds.ordinates, T) + ds.real_ordinate_multiplicity


@dataclass(frozen=True)
class WindowRow:
    T: float
    count: int
    eta: mpf
    window: CountWindow
    margin: mpf

    @property
    def passed(self) -> bool:
        return self.margin > 0


@dataclass(frozen=True)
class WindowReport:
    label: str
    rows: tuple
    source: str

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def min_margin(self) -> mpf:
        return min(r.margin for r in self.rows)


def verify_window(ds: ZeroDataset, eta="auto", T_grid=None,
                  cfg: ToleranceConfig = DEFAULT_CONFIG) -> WindowReport:
    """Check |N_K(T) - main(T)| <= bound(T) at each T of the grid."""
    if T_grid is None:
        T_grid = range(1, int(min(30, ds.completeness_height)) + 1)
    T_grid = list(T_grid)
    if not T_grid:
        raise DomainError("empty T grid")
    for T in T_grid:
        if not 1 <= T <= ds.completeness_height:
            raise DomainError(f"T = {T} outside [1, {ds.completeness_height}]")
    rows = []
    for T in T_grid:
        n = count_zeros(ds, T)
        if eta == "auto":
            e, win = optimize_eta(ds.field, T, cfg)
        else:
            e = mpf(eta)
            win = count_window(ds.field, T, e, cfg)
        rows.append(WindowRow(float(T), n, e, win, win.margin(n)))
    return WindowReport(ds.label, tuple(rows), ds.source)
