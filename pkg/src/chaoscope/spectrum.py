"""Mean-period estimation via FFT periodogram and via DWT subband energies.

The FFT path takes the reciprocal of the power-weighted mean frequency of
the periodogram. The DWT path decomposes the signal into dyadic detail
bands, assigns each level the pseudo-frequency f_c / (2^level * dt), and
takes the reciprocal of the energy-weighted mean of those. Both reduce a
spectrum to a single "about one cycle" length used as the temporal
exclusion window in neighbor searches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSpectrumError, TooShortError, UnknownWaveletError
from .series import TimeSeries

_SQRT2 = math.sqrt(2.0)
_SQRT3 = math.sqrt(3.0)

# orthonormal analysis filters (lowpass, highpass)
_FILTERS = {
    "haar": (
        np.array([1.0, 1.0]) / _SQRT2,
        np.array([1.0, -1.0]) / _SQRT2,
    ),
    "db4": (
        np.array([1.0 + _SQRT3, 3.0 + _SQRT3, 3.0 - _SQRT3, 1.0 - _SQRT3]) / (4.0 * _SQRT2),
        np.array([1.0 - _SQRT3, -(3.0 - _SQRT3), 3.0 + _SQRT3, -(1.0 + _SQRT3)]) / (4.0 * _SQRT2),
    ),
}

# center frequency in cycles per sample at level 0
CENTER_FREQ = {"haar": 0.9961, "db4": 0.6667}

DEFAULT_WAVELET = "db4"

# relative energy floor below which a spectrum counts as degenerate
_DEGENERATE_REL = 1e-24


@dataclass(frozen=True)
class PowerSpectrum:
    """One-sided periodogram, DC bin excluded."""

    freqs: np.ndarray
    power: np.ndarray

    @property
    def total_power(self) -> float:
        return float(self.power.sum())


@dataclass(frozen=True)
class MeanPeriod:
    seconds: float
    samples: int


@dataclass(frozen=True)
class WaveletDecomposition:
    """Subband energies of a multilevel orthogonal DWT.

    ``n_used`` is the dyadic prefix length actually transformed; it is
    smaller than the input length for non-dyadic inputs.
    """

    detail_energies: np.ndarray  # level 1 (finest) .. level L (coarsest)
    approx_energy: float
    wavelet_name: str
    levels: int
    n_used: int

    @property
    def total_energy(self) -> float:
        return float(self.detail_energies.sum() + self.approx_energy)


def power_spectrum(ts: TimeSeries) -> PowerSpectrum:
    """Periodogram of the mean-removed series.

    power[k] = |X_k|^2 / N at frequency k / (N*dt), k = 1 .. N//2.
    """
    n = len(ts)
    if n < 4:
        raise TooShortError("periodogram needs at least 4 samples")
    x = ts.samples - ts.samples.mean()
    spec = np.fft.rfft(x)
    k = np.arange(1, n // 2 + 1)
    power = np.abs(spec[k]) ** 2 / n
    freqs = k / (n * ts.dt)
    return PowerSpectrum(freqs=freqs, power=power)


def mean_period_fft(ts: TimeSeries) -> MeanPeriod:
    """Reciprocal of the power-weighted mean frequency of the periodogram."""
    ps = power_spectrum(ts)
    total = ps.total_power
    scale = float(np.max(ts.samples**2)) if len(ts) else 0.0
    if total <= _DEGENERATE_REL * max(1e-300, scale) * len(ts):
        raise DegenerateSpectrumError("spectrum has no usable power")
    f_mean = float((ps.freqs * ps.power).sum() / total)
    seconds = 1.0 / f_mean
    return MeanPeriod(seconds=seconds, samples=max(1, round(seconds / ts.dt)))


def _dwt_step(a: np.ndarray, lo: np.ndarray, hi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    # periodic extension keeps the transform orthogonal for even lengths
    m = a.size
    taps = lo.size
    idx = (2 * np.arange(m // 2)[:, None] + np.arange(taps)[None, :]) % m
    seg = a[idx]
    return seg @ lo, seg @ hi


def dwt(ts: TimeSeries, wavelet_name: str = DEFAULT_WAVELET, levels: int = 1) -> WaveletDecomposition:
    """Multilevel orthogonal DWT with periodic boundary handling.

    Non-dyadic inputs are truncated to their largest power-of-two prefix
    (reported via ``n_used``) so that subband energies satisfy Parseval
    exactly.
    """
    if wavelet_name not in _FILTERS:
        raise UnknownWaveletError(
            f"unknown wavelet {wavelet_name!r}; supported: {sorted(_FILTERS)}"
        )
    if levels < 1:
        raise ValueError("levels must be >= 1")
    n = len(ts)
    if n < 2**levels:
        raise TooShortError(f"need at least 2^{levels} samples for {levels} levels")
    lo, hi = _FILTERS[wavelet_name]
    n_used = 1 << int(math.floor(math.log2(n)))
    a = ts.samples[:n_used].astype(np.float64)
    detail = np.empty(levels)
    for lev in range(levels):
        a, d = _dwt_step(a, lo, hi)
        detail[lev] = float(d @ d)
    return WaveletDecomposition(
        detail_energies=detail,
        approx_energy=float(a @ a),
        wavelet_name=wavelet_name,
        levels=levels,
        n_used=n_used,
    )


def default_dwt_levels(n_samples: int) -> int:
    """Depth used by the mean-period estimate: floor(log2 N) - 2, min 1."""
    if n_samples < 2:
        raise TooShortError("need at least 2 samples")
    return max(1, int(math.floor(math.log2(n_samples))) - 2)


def mean_period_dwt(ts: TimeSeries, wavelet_name: str = DEFAULT_WAVELET) -> MeanPeriod:
    """Reciprocal of the detail-energy-weighted mean pseudo-frequency.

    Level l covers pseudo-frequency f_c / (2^l * dt); weighting by the
    level energies makes the estimate scale-invariant and, for a
    narrowband signal, close to the reciprocal band center.
    """
    levels = default_dwt_levels(len(ts))
    dec = dwt(ts, wavelet_name=wavelet_name, levels=levels)
    detail_total = float(dec.detail_energies.sum())
    if detail_total <= _DEGENERATE_REL * max(1e-300, dec.total_energy):
        raise DegenerateSpectrumError("all detail energies are zero")
    f_c = CENTER_FREQ[wavelet_name]
    lev = np.arange(1, levels + 1)
    f = f_c / (2.0**lev * ts.dt)
    f_mean = float((dec.detail_energies * f).sum() / detail_total)
    seconds = 1.0 / f_mean
    return MeanPeriod(seconds=seconds, samples=max(1, round(seconds / ts.dt)))
