"""Phase transform and synchrosqueezing onto a frequency grid."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cwt import CwtResult, ScaleGrid
from .exceptions import InvalidSpecError
from .wavelets import WaveletSpec

__all__ = [
    "PhaseTransform",
    "FreqGrid",
    "SqueezedTransform",
    "phase_transform",
    "default_freq_grid",
    "synchrosqueeze",
    "exclude_cone",
]


@dataclass(frozen=True, eq=False)
class PhaseTransform:
    """Instantaneous-frequency candidates ``omega = Im(dW/db / W)`` where ``|W| > threshold``.

    ``omega`` is NaN outside the mask. ``max_imag_residue`` is the largest
    ``|Re(dW/db / W)|`` over the mask, i.e. the imaginary part discarded when
    ``-i dW/W`` is treated as real.
    """

    omega: np.ndarray
    mask: np.ndarray
    threshold: float
    max_imag_residue: float

    def __post_init__(self):
        if self.omega.shape != self.mask.shape:
            raise InvalidSpecError("omega and mask shapes differ")
        if not self.threshold > 0:
            raise InvalidSpecError("threshold must be positive")
        self.omega.setflags(write=False)
        self.mask.setflags(write=False)


def exclude_cone(p: PhaseTransform, c: CwtResult) -> PhaseTransform:
    """Phase transform with coefficients inside the cone of influence unmasked."""
    return PhaseTransform(p.omega, p.mask & c.outside_cone(), p.threshold, p.max_imag_residue)


def phase_transform(c: CwtResult, threshold: float = 1e-8, mode: str = "relative") -> PhaseTransform:
    """Compute the phase transform of ``c``.

    ``mode="relative"`` uses ``threshold * max|W|``; ``mode="absolute"``
    uses ``threshold`` as is. An all-zero transform yields an empty mask.
    """
    if not (threshold > 0 and math.isfinite(threshold)):
        raise InvalidSpecError(f"threshold must be positive and finite, got {threshold}")
    mag = np.abs(c.w)
    if mode == "relative":
        peak = float(mag.max())
        thr = threshold * peak if peak > 0 else threshold
    elif mode == "absolute":
        thr = float(threshold)
    else:
        raise InvalidSpecError(f"threshold mode must be 'relative' or 'absolute', got {mode!r}")
    mask = mag > thr
    omega = np.full(c.w.shape, np.nan)
    ratio = c.dwdb[mask] / c.w[mask]
    omega[mask] = ratio.imag
    residue = float(np.max(np.abs(ratio.real))) if ratio.size else 0.0
    return PhaseTransform(omega, mask, thr, residue)


@dataclass(frozen=True, eq=False)
class FreqGrid:
    """Contiguous frequency bins ``[edges[l], edges[l+1])`` in rad/s.

    ``measure`` is the bin width in the grid's own variable: ``d omega`` for
    linear grids and ``d log omega`` for log grids.
    """

    kind: str
    edges: np.ndarray

    def __post_init__(self):
        if self.kind not in ("linear", "log"):
            raise InvalidSpecError(f"grid kind must be 'linear' or 'log', got {self.kind!r}")
        edges = np.array(self.edges, dtype=float)
        if edges.ndim != 1 or edges.size < 2 or not np.all(np.diff(edges) > 0):
            raise InvalidSpecError("grid edges must be increasing with at least one bin")
        if self.kind == "log" and edges[0] <= 0:
            raise InvalidSpecError("log grid must start above zero")
        edges.setflags(write=False)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def linear(cls, lo: float, hi: float, count: int) -> "FreqGrid":
        return cls("linear", np.linspace(lo, hi, int(count) + 1))

    @classmethod
    def log(cls, lo: float, hi: float, bins_per_octave: int) -> "FreqGrid":
        count = max(1, int(round(math.log2(hi / lo) * bins_per_octave)))
        return cls("log", lo * 2.0 ** (np.arange(count + 1) / bins_per_octave))

    @property
    def centers(self) -> np.ndarray:
        if self.kind == "log":
            return np.sqrt(self.edges[:-1] * self.edges[1:])
        return 0.5 * (self.edges[:-1] + self.edges[1:])

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.edges)

    @property
    def measure(self) -> np.ndarray:
        if self.kind == "log":
            return np.diff(np.log(self.edges))
        return self.widths

    @property
    def log_spacing(self) -> float:
        """Median spacing of the centers in log-frequency."""
        c = self.centers
        c = c[c > 0]
        return float(np.median(np.diff(np.log(c)))) if c.size > 1 else 1.0

    def locate(self, omega) -> np.ndarray:
        """Bin index per value, -1 where outside ``[edges[0], edges[-1])``."""
        omega = np.asarray(omega, dtype=float)
        idx = np.searchsorted(self.edges, omega, side="right") - 1
        out = (idx < 0) | (idx >= self.edges.size - 1) | ~np.isfinite(omega)
        return np.where(out, -1, idx)

    def __len__(self):
        return self.edges.size - 1


def default_freq_grid(c: CwtResult, kind: str = "log", count: int = 32) -> FreqGrid:
    """Grid matched to the scale grid of ``c``.

    Log grids carry ``count`` bins per octave over the frequencies the
    passbands can reach, capped at Nyquist. Linear grids carry ``count``
    bins over ``[0, Nyquist]``.
    """
    if count < 1:
        raise InvalidSpecError("bin count must be positive")
    if kind == "linear":
        return FreqGrid.linear(0.0, c.nyquist, count)
    if kind != "log":
        raise InvalidSpecError(f"grid kind must be 'linear' or 'log', got {kind!r}")
    lo_edge, hi_edge = c.wavelet.passband
    lo = lo_edge / c.grid.a_max
    hi = min(hi_edge / c.grid.a_min, c.nyquist)
    return FreqGrid.log(lo, hi, count)


@dataclass(frozen=True, eq=False)
class SqueezedTransform:
    """Synchrosqueezed transform ``t`` of shape (bins, times).

    ``t`` is a density in the grid's own variable, so ``t * grid.measure``
    is the wavelet mass ``sum W a^{-3/2} da`` that landed in each bin. For a
    log grid that equals the ``a^{-1/2} d(log a) / d(log omega)``
    weighting.
    """

    t: np.ndarray
    grid: FreqGrid
    weight_exponent: float
    scales: ScaleGrid
    wavelet: WaveletSpec
    threshold: float
    dropped_count: int
    sample_rate: float
    t0: float
    n: int
    analytic_input: bool = False

    def __post_init__(self):
        if self.t.shape != (len(self.grid), self.n):
            raise InvalidSpecError(f"t has shape {self.t.shape}, expected {(len(self.grid), self.n)}")
        self.t.setflags(write=False)

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.n) / self.sample_rate

    def mass(self) -> np.ndarray:
        """Per-bin wavelet mass ``T * measure``."""
        return self.t * self.grid.measure[:, None]

    def density(self) -> np.ndarray:
        """Mass per rad/s, ``T * measure / width``; equals ``t`` for linear grids."""
        return self.mass() / self.grid.widths[:, None]


def synchrosqueeze(c: CwtResult, p: PhaseTransform, g: FreqGrid) -> SqueezedTransform:
    """Move each masked coefficient to the bin containing its phase-transform value."""
    if p.omega.shape != c.w.shape:
        raise InvalidSpecError(f"phase transform shape {p.omega.shape} != transform shape {c.w.shape}")
    a = c.grid.scales
    if g.kind == "log":
        # W a^{-1/2} dlog(a); identical to W a^{-3/2} da
        exponent = -0.5
        weight = a ** exponent * c.grid.log_step
    else:
        exponent = -1.5
        weight = a ** exponent * c.grid.da
    nbins, n = len(g), c.n

    rows, cols = np.nonzero(p.mask)
    omega = p.omega[rows, cols]
    usable = np.isfinite(omega) & (omega > 0)
    bins = np.full(omega.shape, -1)
    bins[usable] = g.locate(omega[usable])
    keep = bins >= 0
    dropped = int(np.count_nonzero(~keep))

    rows, cols, bins = rows[keep], cols[keep], bins[keep]
    contrib = c.w[rows, cols] * weight[rows]
    flat = bins * n + cols
    size = nbins * n
    acc = np.bincount(flat, weights=contrib.real, minlength=size) + 1j * np.bincount(
        flat, weights=contrib.imag, minlength=size
    )
    t = acc.reshape(nbins, n) / g.measure[:, None]
    return SqueezedTransform(
        t=t,
        grid=g,
        weight_exponent=exponent,
        scales=c.grid,
        wavelet=c.wavelet,
        threshold=p.threshold,
        dropped_count=dropped,
        sample_rate=c.sample_rate,
        t0=c.t0,
        n=n,
        analytic_input=c.analytic_input,
    )
