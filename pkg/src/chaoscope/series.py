"""Scalar time series and RR-interval sequences.

The RR text format is UTF-8, one interval in milliseconds per line,
``#`` line comments, blank lines ignored, LF or CRLF endings.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .errors import (
    EmptyInputError,
    IntervalRangeError,
    ParseError,
    TooShortError,
)

# physiological plausibility gate for a single beat interval
RR_MIN_S = 0.2
RR_MAX_S = 5.0


class TimeBase(Enum):
    """How an RR sequence is indexed when treated as a time series."""

    PER_BEAT = "per-beat"
    MEAN_RR_SECONDS = "mean-rr-seconds"


def _as_float_array(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError("samples must be one-dimensional")
    return arr


@dataclass(frozen=True)
class TimeSeries:
    """Uniformly indexed scalar samples with a fixed time step.

    ``dt`` is seconds per sample when ``time_unit`` is "s", otherwise one
    abstract unit per sample ("beat" for per-beat RR series, "step" for
    map iterates).
    """

    samples: np.ndarray
    dt: float = 1.0
    label: str = ""
    time_unit: str = "s"

    def __post_init__(self):
        arr = _as_float_array(self.samples)
        if arr.size < 1:
            raise ValueError("series must contain at least one sample")
        if not np.all(np.isfinite(arr)):
            raise ValueError("series contains non-finite samples")
        if not (self.dt > 0):
            raise ValueError("dt must be positive")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "samples", arr)

    def __len__(self) -> int:
        return int(self.samples.size)


@dataclass(frozen=True)
class RRSeries:
    """Ordered beat-to-beat intervals in seconds."""

    intervals_s: np.ndarray
    source: str = ""

    def __post_init__(self):
        arr = _as_float_array(self.intervals_s)
        if arr.size == 0:
            raise EmptyInputError("RR series is empty")
        for i, v in enumerate(arr):
            if not np.isfinite(v) or not (RR_MIN_S < v < RR_MAX_S):
                raise IntervalRangeError(i, float(v))
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "intervals_s", arr)

    def __len__(self) -> int:
        return int(self.intervals_s.size)


def parse_rr_file(text: bytes | str, source: str = "") -> RRSeries:
    """Parse RR text (one interval in ms per line) into an RRSeries.

    Raises EmptyInputError when nothing remains after filtering,
    ParseError with the 1-based line number for non-numeric lines, and
    IntervalRangeError for intervals outside the plausibility gate.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(0, f"not valid UTF-8: {exc}") from exc
    values = []
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip().rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        try:
            ms = float(line)
        except ValueError as exc:
            raise ParseError(line_no, f"not a number: {line!r}") from exc
        values.append(ms / 1000.0)
    if not values:
        raise EmptyInputError("no intervals found")
    return RRSeries(intervals_s=np.array(values), source=source)


def serialize_rr(rr: RRSeries, precision: int = 3) -> str:
    """Render an RRSeries back to RR text (ms per line, fixed precision)."""
    lines = [f"{v * 1000.0:.{precision}f}" for v in rr.intervals_s]
    return "\n".join(lines) + "\n"


def rr_to_timeseries(rr: RRSeries, time_base: TimeBase = TimeBase.PER_BEAT) -> TimeSeries:
    """View an RR sequence as a uniformly indexed series.

    PER_BEAT uses dt = 1 (one unit per beat); MEAN_RR_SECONDS uses the
    mean interval as the physical time step.
    """
    if time_base is TimeBase.PER_BEAT:
        dt, unit = 1.0, "beat"
    else:
        dt, unit = float(np.mean(rr.intervals_s)), "s"
    return TimeSeries(samples=rr.intervals_s, dt=dt, label=rr.source, time_unit=unit)


def successive_differences(ts: TimeSeries) -> TimeSeries:
    """First differences sample[i+1] - sample[i]; keeps dt."""
    if len(ts) < 2:
        raise TooShortError("need at least 2 samples to difference")
    return TimeSeries(
        samples=np.diff(ts.samples),
        dt=ts.dt,
        label=ts.label,
        time_unit=ts.time_unit,
    )
