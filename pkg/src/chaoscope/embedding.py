"""Delay-coordinate reconstruction and temporally constrained neighbor search.

An embedded point i is the vector (x[i], x[i+tau], ..., x[i+(dim-1)*tau]);
a series of length N yields exactly N - (dim-1)*tau points. Neighbor
searches exclude candidates closer in time than a given separation so
that a "neighbor" sits on a different stretch of the trajectory.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoNeighborError, TooShortError
from .series import TimeSeries

# above this count the exact max-pairwise diameter switches to the
# bounding-box upper bound
_EXACT_DIAMETER_LIMIT = 2000


@dataclass(frozen=True)
class EmbeddingConfig:
    dim: int = 10
    tau: int = 1

    def __post_init__(self):
        if self.dim < 1 or self.tau < 1:
            raise ValueError("embedding dimension and lag must be >= 1")

    def point_count(self, n_samples: int) -> int:
        return n_samples - (self.dim - 1) * self.tau


@dataclass(frozen=True)
class EmbeddedSeries:
    """Ordered delay vectors plus the configuration that produced them."""

    points: np.ndarray  # shape (n_points, dim)
    config: EmbeddingConfig
    source_dt: float

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=np.float64)
        pts = pts.copy()
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return int(self.points.shape[0])


@dataclass(frozen=True)
class NeighborPair:
    ref_index: int
    nbr_index: int
    d0: float


@dataclass(frozen=True)
class AttractorDiameter:
    value: float
    exact: bool


def embed(ts: TimeSeries, cfg: EmbeddingConfig) -> EmbeddedSeries:
    """Build the delay-vector cloud for a series."""
    n = cfg.point_count(len(ts))
    if n < 2:
        raise TooShortError(
            f"series of length {len(ts)} yields {n} embedded points "
            f"for dim={cfg.dim}, tau={cfg.tau}; need at least 2"
        )
    x = ts.samples
    pts = np.empty((n, cfg.dim))
    for k in range(cfg.dim):
        pts[:, k] = x[k * cfg.tau : k * cfg.tau + n]
    return EmbeddedSeries(points=pts, config=cfg, source_dt=ts.dt)


def _distances_to(points: np.ndarray, i: int) -> np.ndarray:
    diff = points - points[i]
    return np.sqrt(np.einsum("ij,ij->i", diff, diff))


def nearest_neighbor(
    es: EmbeddedSeries, ref_index: int, min_temporal_sep: int = 0
) -> NeighborPair:
    """Closest point to ref_index with |i - ref| strictly above the
    temporal separation; ties broken toward the smaller index."""
    n = len(es)
    if not 0 <= ref_index < n:
        raise IndexError(f"ref_index {ref_index} out of range [0, {n})")
    d = _distances_to(es.points, ref_index)
    excluded = np.abs(np.arange(n) - ref_index) <= min_temporal_sep
    if excluded.all():
        raise NoNeighborError(
            f"no candidate outside temporal window {min_temporal_sep} "
            f"around index {ref_index}"
        )
    d = np.where(excluded, np.inf, d)
    j = int(np.argmin(d))  # argmin returns the first (smallest) index on ties
    return NeighborPair(ref_index=ref_index, nbr_index=j, d0=float(d[j]))


def nearest_neighbors_all(
    es: EmbeddedSeries, min_temporal_sep: int = 0, chunk: int = 256
) -> tuple[np.ndarray, np.ndarray]:
    """Nearest temporally separated neighbor for every point.

    Returns (nbr_index, d0) arrays; nbr_index is -1 where the exclusion
    window leaves no candidate.
    """
    pts = es.points
    n = len(es)
    idx = np.arange(n)
    nbr = np.full(n, -1, dtype=np.int64)
    d0 = np.full(n, np.inf)
    for lo in range(0, n, chunk):
        hi = min(n, lo + chunk)
        block = pts[lo:hi]
        d2 = (
            np.einsum("ij,ij->i", block, block)[:, None]
            - 2.0 * block @ pts.T
            + np.einsum("ij,ij->i", pts, pts)[None, :]
        )
        np.maximum(d2, 0.0, out=d2)
        for r, j in enumerate(range(lo, hi)):
            row = d2[r]
            masked = np.where(np.abs(idx - j) <= min_temporal_sep, np.inf, row)
            k = int(np.argmin(masked))
            if np.isfinite(masked[k]):
                nbr[j] = k
                d0[j] = np.sqrt(masked[k])
    return nbr, d0


def attractor_diameter(es: EmbeddedSeries) -> AttractorDiameter:
    """Max pairwise distance; exact up to 2000 points, bounding-box
    diagonal (an upper bound) beyond that."""
    pts = es.points
    n = len(es)
    if n < 2:
        raise TooShortError("diameter needs at least 2 points")
    if n <= _EXACT_DIAMETER_LIMIT:
        best = 0.0
        for i in range(n - 1):
            diff = pts[i + 1 :] - pts[i]
            d2 = np.einsum("ij,ij->i", diff, diff)
            m = float(d2.max())
            if m > best:
                best = m
        return AttractorDiameter(value=float(np.sqrt(best)), exact=True)
    span = pts.max(axis=0) - pts.min(axis=0)
    return AttractorDiameter(value=float(np.sqrt((span**2).sum())), exact=False)
