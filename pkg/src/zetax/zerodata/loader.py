"""Zero datasets: ordinates of nontrivial zeros of zeta_K up to a completeness height."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..numerics import DomainError
from ..zerocount import FieldParams

BUNDLED = {"riemann": "riemann.json", "q_sqrt5": "q_sqrt5.json", "q_i": "q_i.json"}


class LoadError(ValueError):
    """A zero dataset failed to parse or violates the schema."""


@dataclass(frozen=True)
class ZeroDataset:
    label: str
    field: FieldParams
    ordinates: tuple
    completeness_height: float
    source: str
    real_ordinate_multiplicity: int = 0

    def __post_init__(self):
        if self.completeness_height <= 0:
            raise LoadError("completeness_height must be positive")
        prev = 0.0
        for g in self.ordinates:
            if not 0 < g <= self.completeness_height:
                raise LoadError(f"ordinate {g} outside (0, {self.completeness_height}]")
            if g < prev:
                raise LoadError("ordinates must be sorted ascending")
            prev = g
        if self.real_ordinate_multiplicity < 0:
            raise LoadError("real_ordinate_multiplicity must be non-negative")


def _reject_constant(name):
    raise LoadError(f"non-finite number {name} in zero data")


def _require(doc, key, kind):
    if key not in doc:
        raise LoadError(f"missing field {key!r}")
    value = doc[key]
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        raise LoadError(f"field {key!r} has type {type(value).__name__}")
    return value


def parse_dataset(text: str | bytes, source: str) -> ZeroDataset:
    """Validate a JSON document against the zero-data schema."""
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise LoadError(f"{source}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise LoadError(f"{source}: top level must be an object")
    label = _require(doc, "label", str)
    n_K = _require(doc, "n_K", int)
    r1 = _require(doc, "r1", int)
    r2 = _require(doc, "r2", int)
    height = float(_require(doc, "completeness_height", (int, float)))
    ordinates = _require(doc, "ordinates", list)
    if not all(isinstance(g, (int, float)) and not isinstance(g, bool) for g in ordinates):
        raise LoadError(f"{source}: ordinates must be numbers")
    if not all(math.isfinite(g) for g in ordinates) or not math.isfinite(height):
        raise LoadError(f"{source}: non-finite number in zero data")
    mult = doc.get("real_ordinate_multiplicity", 0)
    if not isinstance(mult, int) or isinstance(mult, bool):
        raise LoadError(f"{source}: real_ordinate_multiplicity must be an integer")
    disc = _require(doc, "log_disc", (int, float, dict))
    try:
        if isinstance(disc, dict):
            d_K = disc.get("d_K")
            if not isinstance(d_K, int) or isinstance(d_K, bool) or d_K == 0:
                raise LoadError(f"{source}: log_disc.d_K must be a nonzero integer")
            field = FieldParams.from_discriminant(n_K, r1, r2, d_K)
        else:
            field = FieldParams(n_K, r1, r2, float(disc))
    except DomainError as exc:
        raise LoadError(f"{source}: {exc}") from exc
    return ZeroDataset(label, field, tuple(float(g) for g in ordinates), height,
                       str(doc.get("source", source)), mult)


def load_fixture(path: str | Path) -> ZeroDataset:
    """Load a zero dataset from a JSON file, or a bundled fixture by name."""
    p = Path(path)
    if not p.exists():
        name = BUNDLED.get(str(path)) or (str(path) if str(path) in BUNDLED.values() else None)
        if name is None:
            raise LoadError(f"no such fixture: {path}")
        text = resources.files(__package__).joinpath("fixtures", name).read_text("utf-8")
        return parse_dataset(text, f"bundled:{name}")
    return parse_dataset(p.read_text(encoding="utf-8"), str(p))
