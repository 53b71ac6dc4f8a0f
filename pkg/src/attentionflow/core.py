"""Core value types and pure series arithmetic.

Everything here operates at daily resolution. A day is addressed by its
proleptic Gregorian ordinal (``datetime.date.toordinal``), so day arithmetic
is plain integer arithmetic with no time zones involved.

Windowed sums are defined as the *correctly rounded* sum of the selected
values (``math.fsum``). That makes the result independent of summation
order, so independently written implementations agree bit-for-bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from datetime import date

import numpy as np

# A calendar day as an integer ordinal; day(1) == 0001-01-01.
DateIndex = int


def day(text: str) -> DateIndex:
    """Parse an ISO-8601 date (``YYYY-MM-DD``) into a day index."""
    return date.fromisoformat(text).toordinal()


def day_text(d: DateIndex) -> str:
    """Format a day index back to ISO-8601."""
    return date.fromordinal(d).isoformat()


def year_of(d: DateIndex) -> int:
    return date.fromordinal(d).year


def year_bounds(year: int) -> tuple[DateIndex, DateIndex]:
    """First and last day index of a calendar year (both inclusive)."""
    return date(year, 1, 1).toordinal(), date(year, 12, 31).toordinal()


def _as_value_array(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("series values must be a non-empty 1-D sequence")
    if not np.all(arr >= 0.0):
        raise ValueError("series values must be non-negative")
    if arr is values and arr.flags.writeable:
        arr = arr.copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class AttentionSeries:
    """Daily non-negative attention counts anchored at a start day.

    Day ``d`` maps to ``values[d - start]`` when in range and 0 elsewhere.
    Values may be a stride-0 broadcast view (see :meth:`constant`), which
    keeps constant-weight edges O(1) in memory.
    """

    start: DateIndex
    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", _as_value_array(self.values))

    @classmethod
    def constant(cls, start: DateIndex, value: float, length: int) -> AttentionSeries:
        """A flat series of ``length`` days without materialising storage."""
        if length < 1:
            raise ValueError("constant series needs length >= 1")
        if not value >= 0.0:
            raise ValueError("series values must be non-negative")
        return cls(start, np.broadcast_to(np.float64(value), (length,)))

    @property
    def end(self) -> DateIndex:
        """Last supported day (inclusive)."""
        return self.start + len(self.values) - 1

    @property
    def is_constant(self) -> bool:
        return self.values.strides == (0,)

    def __len__(self) -> int:
        return len(self.values)

    def value_on(self, d: DateIndex) -> float:
        if self.start <= d <= self.end:
            return float(self.values[d - self.start])
        return 0.0


@dataclass(frozen=True)
class ObservationWindow:
    """Inclusive ``[start, end]`` day range selected by the time slider."""

    start: DateIndex
    end: DateIndex

    def __post_init__(self) -> None:
        if self.start > self.end:
            raise ValueError(
                f"window start {day_text(self.start)} after end {day_text(self.end)}"
            )

    @property
    def n_days(self) -> int:
        return self.end - self.start + 1

    def __contains__(self, d: DateIndex) -> bool:
        return self.start <= d <= self.end


@dataclass(frozen=True, eq=False)
class NodeRecord:
    """A network node: one entity with its attention series and metadata."""

    id: str
    name: str
    created: DateIndex
    categories: tuple[str, ...]
    series: AttentionSeries
    meta: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.created != self.series.start:
            raise ValueError(f"node {self.id!r}: created must equal series start")


@dataclass(frozen=True, eq=False)
class DynamicEdge:
    """Directed edge with a daily weight series (attention units/day).

    Self-loops (``source == target``) are permitted.
    """

    source: str
    target: str
    weights: AttentionSeries


@dataclass(frozen=True)
class EventRecord:
    """A dated real-world event; ``node_id == ""`` means dataset-global."""

    node_id: str
    date: DateIndex
    label: str
    url: str | None = None

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("event label must be non-empty")


def _overlap(series: AttentionSeries, window: ObservationWindow) -> tuple[int, int]:
    """Half-open index range of ``series.values`` covered by the window."""
    lo = max(window.start, series.start) - series.start
    hi = min(window.end, series.end) - series.start + 1
    return lo, max(lo, hi)


def window_sum(series: AttentionSeries, window: ObservationWindow) -> float:
    """Sum of values on days in the window; days outside support contribute 0.

    Returns the correctly rounded sum (order independent).
    """
    lo, hi = _overlap(series, window)
    if hi <= lo:
        return 0.0
    if series.values.strides == (0,):
        # n identical values: n*v is the same correctly rounded result.
        return float(hi - lo) * float(series.values[0])
    return math.fsum(series.values[lo:hi].tolist())


def align_daily(series: AttentionSeries, window: ObservationWindow) -> np.ndarray:
    """Dense vector over the window: element i is the value on start+i, else 0."""
    out = np.zeros(window.n_days, dtype=np.float64)
    lo, hi = _overlap(series, window)
    if hi > lo:
        at = series.start + lo - window.start
        out[at : at + (hi - lo)] = series.values[lo:hi]
    return out


def year_partition(series: AttentionSeries) -> list[tuple[int, float]]:
    """Per-calendar-year attention sums over the series support, in order."""
    first, last = year_of(series.start), year_of(series.end)
    parts = []
    for year in range(first, last + 1):
        y0, y1 = year_bounds(year)
        parts.append((year, window_sum(series, ObservationWindow(y0, y1))))
    return parts


def canonical_json(payload) -> str:
    """Deterministic JSON: sorted keys, minimal separators, no NaN/Inf."""
    return json.dumps(
        payload, sort_keys=True, separators=(",", ":"), allow_nan=False
    )
