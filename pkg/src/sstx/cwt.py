"""Continuous wavelet transform over a log-uniform scale grid.

Rows are computed in the frequency domain::

    W(a, b)    = (1/2pi) int s_hat(xi) sqrt(a) conj(psi_hat(a xi)) exp(i b xi) dxi
    dW/db(a,b) = the same integrand times i xi

so the time derivative needed by the phase transform is spectral, not a
finite difference.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import fft as sfft

from .exceptions import GridError, InvalidSpecError
from .signals import Signal
from .wavelets import WaveletSpec, constants, spectrum

__all__ = [
    "ScaleGrid",
    "CwtResult",
    "default_scale_grid",
    "cwt",
    "cwt_samples",
    "cwt_direct_oracle",
    "cone_of_influence",
    "interior_mask",
    "cone_mask",
    "scales_clear_of",
    "fft_workers",
    "PADDING_MODES",
]

PADDING_MODES = ("reflect", "zero", "periodic")
COI_WIDTHS = 5.0


def fft_workers() -> int:
    """Worker count for scipy.fft, capped by the ``SSTX_THREADS`` variable."""
    env = os.environ.get("SSTX_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


@dataclass(frozen=True, eq=False)
class ScaleGrid:
    """Scales ``a_k = a_min * 2**(k / voices)``, k = 0..K-1."""

    scales: np.ndarray
    voices: int

    def __post_init__(self):
        scales = np.array(self.scales, dtype=float)
        scales.setflags(write=False)
        if self.voices < 4:
            raise GridError(f"voices per octave must be at least 4, got {self.voices}")
        if scales.ndim != 1 or scales.size < 2 or not np.all(scales > 0):
            raise GridError("scale grid needs at least two positive scales")
        ratio = scales[1:] / scales[:-1]
        if not np.allclose(ratio, 2 ** (1 / self.voices), rtol=1e-12, atol=0):
            raise GridError("scales are not log-uniform at the stated voices per octave")
        object.__setattr__(self, "scales", scales)
        object.__setattr__(self, "voices", int(self.voices))

    @classmethod
    def log_uniform(cls, a_min: float, a_max: float, voices: int) -> "ScaleGrid":
        if voices < 4:
            raise GridError(f"voices per octave must be at least 4, got {voices}")
        if not 0 < a_min < a_max:
            raise GridError(f"need 0 < a_min < a_max, got {a_min}, {a_max}")
        count = int(math.floor(voices * math.log2(a_max / a_min) + 1e-9)) + 1
        return cls(a_min * 2.0 ** (np.arange(count) / voices), voices)

    @property
    def a_min(self) -> float:
        return float(self.scales[0])

    @property
    def a_max(self) -> float:
        return float(self.scales[-1])

    @property
    def log_step(self) -> float:
        return math.log(2) / self.voices

    @property
    def da(self) -> np.ndarray:
        """Quadrature weights for integrals over ``a`` (trapezoid in log a)."""
        return self.scales * self.log_step

    @property
    def octaves(self) -> float:
        return math.log2(self.a_max / self.a_min)

    def __len__(self):
        return self.scales.size


def default_scale_grid(s: Signal, spec: WaveletSpec, voices: int = 32) -> ScaleGrid:
    """Scales from the one whose band limit sits at Nyquist up to the one whose
    passband reaches down to ``4 / duration`` rad/s."""
    if voices < 4:
        raise GridError(f"voices per octave must be at least 4, got {voices}")
    lo = spec.passband[0]
    a_min = spec.band_limit / (math.pi * s.sample_rate)
    a_max = min(lo * s.duration / 4.0, s.duration)
    if a_max < 2 * a_min:
        raise GridError(
            f"signal of {s.duration:g} s at {s.sample_rate:g} Hz is too short for one octave of scales"
        )
    return ScaleGrid.log_uniform(a_min, a_max, voices)


def cone_of_influence(spec: WaveletSpec, scales) -> np.ndarray:
    """Half-width in seconds of the boundary region affected at each scale."""
    return COI_WIDTHS * constants(spec).time_spread * np.asarray(scales, dtype=float)


def interior_mask(times, spec: WaveletSpec, freq, start=None, stop=None) -> np.ndarray:
    """Times clear of the cone of influence for content at ``freq`` rad/s.

    ``freq`` is a scalar or per-time array holding the lowest frequency of
    interest at each time; its scale ``center / freq`` sets the margin
    required from both ends of ``[start, stop]`` (default: the first and last
    time).
    """
    times = np.asarray(times, dtype=float)
    start = times[0] if start is None else start
    stop = times[-1] if stop is None else stop
    freq = np.broadcast_to(np.asarray(freq, dtype=float), times.shape)
    margin = cone_of_influence(spec, spec.center / freq)
    return (times - start >= margin) & (stop - times >= margin)


def cone_mask(spec: WaveletSpec, scales, times) -> np.ndarray:
    """Boolean (scales, times): True outside each scale's cone of influence."""
    times = np.asarray(times, dtype=float)
    margin = cone_of_influence(spec, scales)[:, None]
    return (times[None, :] - times[0] >= margin) & (times[-1] - times[None, :] >= margin)


def scales_clear_of(spec: WaveletSpec, scales, times, window) -> np.ndarray:
    """Boolean per scale: its cone of influence stays outside the ``window`` times."""
    times = np.asarray(times, dtype=float)
    window = np.asarray(window, dtype=bool)
    if not window.any():
        return np.zeros(np.shape(scales), dtype=bool)
    inner = times[window]
    room = min(inner[0] - times[0], times[-1] - inner[-1])
    return cone_of_influence(spec, scales) <= room + 1e-12


@dataclass(frozen=True, eq=False)
class CwtResult:
    """Wavelet coefficients ``w`` and their time derivative ``dwdb``, shape (scales, times)."""

    w: np.ndarray
    dwdb: np.ndarray
    grid: ScaleGrid
    wavelet: WaveletSpec
    sample_rate: float
    t0: float
    n: int
    padding: str = "reflect"
    analytic_input: bool = False

    def __post_init__(self):
        if self.w.shape != self.dwdb.shape:
            raise InvalidSpecError("w and dwdb must have the same shape")
        if self.w.shape != (len(self.grid), self.n):
            raise InvalidSpecError(f"w has shape {self.w.shape}, expected {(len(self.grid), self.n)}")
        for arr in (self.w, self.dwdb):
            arr.setflags(write=False)

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.n) / self.sample_rate

    @property
    def scales(self) -> np.ndarray:
        return self.grid.scales

    @property
    def nyquist(self) -> float:
        """Nyquist frequency in rad/s."""
        return math.pi * self.sample_rate

    def coi(self) -> np.ndarray:
        return cone_of_influence(self.wavelet, self.grid.scales)

    def outside_cone(self) -> np.ndarray:
        return cone_mask(self.wavelet, self.grid.scales, self.times)


def _pad(x: np.ndarray, padding: str):
    n = x.size
    if padding == "periodic":
        return x, 0
    if padding not in PADDING_MODES:
        raise InvalidSpecError(f"padding must be one of {PADDING_MODES}, got {padding!r}")
    total = 1 << int(math.ceil(math.log2(3 * n)))
    left = (total - n) // 2
    right = total - n - left
    mode = "reflect" if padding == "reflect" else "constant"
    if padding == "reflect" and n < 2:
        mode = "edge"
    return np.pad(x, (left, right), mode=mode), left


ZERO_PAD_MAX = 1 << 23
_CHUNK_POINTS = 1 << 21


def _tail_span(spec: WaveletSpec) -> float:
    # |psi(u)| / max |psi| falls below ~1e-10 beyond this |u|
    if spec.kind == "bump":
        return 500.0 / spec.delta
    return 40.0


def _rows(spec_x, xi, spec, scales, lo, n, workers):
    a = scales[:, None]
    prod = spec_x[None, :] * (np.sqrt(a) * spectrum(spec, a * xi[None, :]))
    w = sfft.ifft(prod, axis=1, workers=workers)[:, lo:lo + n]
    dw = sfft.ifft(prod * (1j * xi[None, :]), axis=1, workers=workers)[:, lo:lo + n]
    return w, dw


def _zero_padded(x, dt, spec, scales, workers):
    # Each scale gets an FFT length whose periodic images of the wavelet lie
    # beyond its tail, so the circular product is a linear correlation with
    # the zero-extended record.
    n = x.size
    need = n + np.ceil(_tail_span(spec) * scales / dt).astype(np.int64)
    floor = 1 << int(math.ceil(math.log2(3 * n)))
    lengths = np.array([
        min(max(floor, 1 << int(math.ceil(math.log2(v)))), max(floor, ZERO_PAD_MAX)) for v in need
    ])
    w = np.empty((scales.size, n), dtype=complex)
    dw = np.empty_like(w)
    for length in np.unique(lengths):
        idx = np.flatnonzero(lengths == length)
        xi = 2 * np.pi * sfft.fftfreq(int(length), dt)
        spec_x = sfft.fft(x, n=int(length), workers=workers)
        step = max(1, _CHUNK_POINTS // int(length))
        for i in range(0, idx.size, step):
            sel = idx[i:i + step]
            w[sel], dw[sel] = _rows(spec_x, xi, spec, scales[sel], 0, n, workers)
    return w, dw


def cwt_samples(
    x,
    sample_rate: float,
    spec: WaveletSpec,
    grid: ScaleGrid,
    padding: str = "reflect",
    t0: float = 0.0,
) -> CwtResult:
    """Transform raw samples, real or complex.

    ``padding="periodic"`` skips padding and treats the record as one period;
    use it only for signals that are exactly periodic on the record.
    ``padding="zero"`` is an exact linear correlation with the zero-extended
    record, up to FFT lengths of ``ZERO_PAD_MAX``.
    """
    x = np.asarray(x)
    analytic = np.iscomplexobj(x)
    x = x.astype(complex if analytic else float)
    if x.ndim != 1 or x.size == 0:
        raise InvalidSpecError("samples must be a non-empty 1-D array")
    n = x.size
    if grid.a_max > n / sample_rate + 1e-12:
        raise GridError(f"largest scale {grid.a_max:g} s exceeds the signal duration")
    if spec.center / grid.a_min > math.pi * sample_rate * (1 + 1e-12):
        raise GridError("smallest scale puts the wavelet center above Nyquist")

    dt = 1.0 / sample_rate
    workers = fft_workers()
    if padding == "zero":
        w, dw = _zero_padded(x, dt, spec, grid.scales, workers)
    else:
        xp, left = _pad(x, padding)
        xi = 2 * np.pi * sfft.fftfreq(xp.size, dt)
        spec_x = sfft.fft(xp, workers=workers)
        w, dw = _rows(spec_x, xi, spec, grid.scales, left, n, workers)
    return CwtResult(
        w=np.ascontiguousarray(w),
        dwdb=np.ascontiguousarray(dw),
        grid=grid,
        wavelet=spec,
        sample_rate=float(sample_rate),
        t0=float(t0),
        n=n,
        padding=padding,
        analytic_input=analytic,
    )


def cwt(
    s: Signal,
    spec: WaveletSpec,
    grid: Optional[ScaleGrid] = None,
    padding: str = "reflect",
) -> CwtResult:
    """Wavelet transform of a :class:`Signal` (default grid: 32 voices)."""
    if grid is None:
        grid = default_scale_grid(s, spec)
    return cwt_samples(s.samples, s.sample_rate, spec, grid, padding, s.t0)


def _psi_direct(spec: WaveletSpec, u: np.ndarray, nodes: int = 4097) -> np.ndarray:
    # psi(u) = (1/2pi) int psi_hat(xi) exp(i xi u) dxi by the trapezoid rule
    if spec.kind == "bump":
        lo, hi = spec.passband
    else:
        lo, hi = 0.0, spec.omega0 + 12.0
    xi = np.linspace(lo, hi, nodes)
    wts = np.full(nodes, xi[1] - xi[0])
    wts[[0, -1]] *= 0.5
    vals = spectrum(spec, xi) * wts / (2 * np.pi)
    out = np.empty(u.shape, dtype=complex)
    for i in range(0, u.size, 256):
        chunk = u.flat[i:i + 256]
        out.flat[i:i + 256] = np.exp(1j * np.outer(chunk, xi)) @ vals
    return out


def cwt_direct_oracle(s: Signal, spec: WaveletSpec, a: float, b: float) -> complex:
    """W(a, b) by direct time-domain quadrature over the samples.

    Independent of the FFT path: psi is rebuilt pointwise from its spectrum
    and the integral over t is a trapezoid sum on the zero-extended record.
    Requires ``b`` at least ``10 a`` from both ends.
    """
    t = s.times
    if b - t[0] < 10 * a or t[-1] - b < 10 * a:
        raise GridError(f"(a={a:g}, b={b:g}) is within 10a of the record boundary")
    u = (t - b) / a
    psi = _psi_direct(spec, u)
    return complex(np.sum(s.samples * np.conj(psi)) * s.dt / math.sqrt(a))
