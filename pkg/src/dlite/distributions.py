"""Finite probability distributions on shared outcome sets.

A :class:`Distribution` is a labeled probability mass function. Construction
normalizes the weights, so file-sourced data that sums to 0.999... is accepted
rather than rejected. Instances are immutable and safe to share between
threads.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    AllZero,
    DuplicateLabel,
    LengthMismatch,
    NegativeWeight,
    NonFiniteInput,
    NonPositiveEpsilon,
    ParseError,
)

# Mass sums farther than this from 1 trigger renormalization on construction.
MASS_SUM_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class Distribution:
    """A labeled finite probability mass function.

    ``masses`` is a read-only float64 array aligned with ``labels``. Weights
    are normalized to sum to 1 on construction; exact zeros are preserved.
    """

    labels: tuple[str, ...]
    masses: np.ndarray

    def __post_init__(self) -> None:
        labels = tuple(str(x) for x in self.labels)
        masses = np.array(self.masses, dtype=float, copy=True).reshape(-1)
        if len(labels) != masses.size:
            raise LengthMismatch(
                f"{len(labels)} labels but {masses.size} weights"
            )
        if len(set(labels)) != len(labels):
            seen: set[str] = set()
            dup = next(x for x in labels if x in seen or seen.add(x))
            raise DuplicateLabel(f"label {dup!r} occurs more than once")
        if not np.all(np.isfinite(masses)):
            raise NonFiniteInput("weights must be finite")
        if np.any(masses < 0):
            i = int(np.argmin(masses))
            raise NegativeWeight(f"weight for {labels[i]!r} is {masses[i]}")
        total = float(masses.sum())
        if total == 0.0:
            raise AllZero("at least one weight must be positive")
        if abs(total - 1.0) > MASS_SUM_TOL:
            masses = masses / total
        masses.setflags(write=False)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "masses", masses)

    def __len__(self) -> int:
        return len(self.labels)

    def mass_of(self, label: str) -> float:
        try:
            return float(self.masses[self.labels.index(label)])
        except ValueError:
            raise KeyError(label) from None

    def as_dict(self) -> dict[str, float]:
        return {lab: float(m) for lab, m in zip(self.labels, self.masses)}


def make_distribution(
    labels: Sequence[str], weights: Sequence[float]
) -> Distribution:
    """Build a normalized distribution from non-negative weights."""
    return Distribution(tuple(labels), np.asarray(weights, dtype=float))


def align(p: Distribution, q: Distribution) -> tuple[Distribution, Distribution]:
    """Re-index both distributions onto the union of their outcome sets.

    The shared outcome order is lexicographic, so measure values do not
    depend on input label order. Outcomes absent from one distribution get
    mass exactly 0 (never epsilon; the core measures are well defined at 0).
    """
    aligned = align_many([p, q])
    return aligned[0], aligned[1]


def align_many(ds: Sequence[Distribution]) -> list[Distribution]:
    """Align any number of distributions onto their common label union."""
    union = sorted(set().union(*(d.labels for d in ds)))
    out = []
    for d in ds:
        masses = np.zeros(len(union))
        index = {lab: i for i, lab in enumerate(union)}
        for lab, m in zip(d.labels, d.masses):
            masses[index[lab]] = m
        out.append(Distribution(tuple(union), masses))
    return out


def smooth(p: Distribution, epsilon: float) -> Distribution:
    """Additive smoothing: masses -> (m + eps) / (1 + n*eps).

    Removes zero masses so KL becomes defined; order of masses is preserved.
    Only needed for the KL baseline; the core measures accept zeros.
    """
    if not (epsilon > 0) or not np.isfinite(epsilon):
        raise NonPositiveEpsilon(f"epsilon must be > 0, got {epsilon}")
    n = len(p)
    masses = (p.masses + epsilon) / (1.0 + n * epsilon)
    return Distribution(p.labels, masses)


def parse_csv(text: str) -> list[tuple[str, Distribution]]:
    """Parse distributions from CSV text.

    Layout: header row carries outcome labels (first cell is the name-column
    header and is ignored); each data row is ``name, w1, w2, ...``. Empty
    cells read as 0. Weights are renormalized on load.
    """
    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if any(cell.strip() for cell in r)]
    if len(rows) < 2:
        raise ParseError("need a header row and at least one distribution row")
    labels = [c.strip() for c in rows[0][1:]]
    if not labels:
        raise ParseError("header row has no outcome labels")
    out: list[tuple[str, Distribution]] = []
    seen: set[str] = set()
    for r, row in enumerate(rows[1:], start=2):
        name = row[0].strip()
        if not name:
            raise ParseError(f"row {r}: missing distribution name")
        if name in seen:
            raise DuplicateLabel(f"row {r}: duplicate distribution name {name!r}")
        seen.add(name)
        cells = row[1:]
        if len(cells) > len(labels):
            raise ParseError(f"row {r} ({name!r}): more cells than header labels")
        weights = []
        for j, cell in enumerate(cells):
            cell = cell.strip()
            if not cell:
                weights.append(0.0)
                continue
            try:
                weights.append(float(cell))
            except ValueError:
                raise ParseError(
                    f"row {r} ({name!r}), column {labels[j]!r}: "
                    f"cannot read {cell!r} as a number"
                ) from None
        weights.extend(0.0 for _ in range(len(labels) - len(cells)))
        out.append((name, make_distribution(labels, weights)))
    return out


def parse_json(text: str) -> list[tuple[str, Distribution]]:
    """Parse distributions from JSON text.

    Expected shape: ``[{"name": str, "masses": {label: weight}}, ...]``.
    Weights are renormalized on load.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(data, list):
        raise ParseError("top-level JSON value must be an array")
    out: list[tuple[str, Distribution]] = []
    seen: set[str] = set()
    for i, item in enumerate(data):
        if not isinstance(item, dict) or "name" not in item or "masses" not in item:
            raise ParseError(f"entry {i}: expected an object with 'name' and 'masses'")
        name = str(item["name"])
        if name in seen:
            raise DuplicateLabel(f"entry {i}: duplicate distribution name {name!r}")
        seen.add(name)
        masses = item["masses"]
        if not isinstance(masses, dict) or not masses:
            raise ParseError(f"entry {i} ({name!r}): 'masses' must be a non-empty object")
        labels = list(masses.keys())
        try:
            weights = [float(masses[lab]) for lab in labels]
        except (TypeError, ValueError):
            raise ParseError(f"entry {i} ({name!r}): weights must be numbers") from None
        out.append((name, make_distribution(labels, weights)))
    return out


def parse_distributions(text: str, fmt: str) -> list[tuple[str, Distribution]]:
    """Dispatch to the CSV or JSON parser; ``fmt`` is 'csv' or 'json'."""
    if fmt == "csv":
        return parse_csv(text)
    if fmt == "json":
        return parse_json(text)
    raise ParseError(f"unknown format {fmt!r} (expected 'csv' or 'json')")


def load_file(path: str, fmt: str | None = None) -> list[tuple[str, Distribution]]:
    """Read a distribution file; format defaults by extension."""
    if fmt is None:
        lowered = path.lower()
        if lowered.endswith(".csv"):
            fmt = "csv"
        elif lowered.endswith(".json"):
            fmt = "json"
        else:
            raise ParseError(
                f"cannot infer format from {path!r}; pass 'csv' or 'json'"
            )
    with open(path, "r", encoding="utf-8") as fh:
        return parse_distributions(fh.read(), fmt)
