"""Signal and component reconstruction from squeezed or wavelet coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import fft as sfft

from .cwt import CwtResult, fft_workers
from .exceptions import ConstantMismatchError, InvalidSpecError
from .ridge import Band, extract_ridges
from .signals import Signal
from .squeeze import FreqGrid, SqueezedTransform
from .wavelets import WaveletConstants, constants, spectrum

__all__ = [
    "Component",
    "reconstruct_full",
    "reconstruct_band",
    "reconstruct_mask",
    "remove_below_cutoff",
    "reconstruct_double_integral",
    "inst_freq_from_trace",
    "drift_cutoff",
    "remove_drift",
]


@dataclass(frozen=True, eq=False)
class Component:
    """A recovered AM-FM component.

    ``complex_trace`` estimates ``A(t) exp(i phi(t))``; ``empty`` flags times
    where the band contained no bins.
    """

    complex_trace: np.ndarray
    real_part: Signal
    amp: np.ndarray
    inst_freq: np.ndarray
    empty: np.ndarray


def _check_constants(wavelet, wc: Optional[WaveletConstants]) -> WaveletConstants:
    if wc is None:
        return constants(wavelet)
    if wc.wavelet != wavelet:
        raise ConstantMismatchError(f"constants are for {wc.wavelet}, transform used {wavelet}")
    return wc


def _complex_full(t: SqueezedTransform, wc: WaveletConstants) -> np.ndarray:
    return t.mass().sum(axis=0) / wc.normalizer(t.analytic_input)


def reconstruct_full(t: SqueezedTransform, wc: Optional[WaveletConstants] = None) -> Signal:
    """Invert the squeezed transform over all bins."""
    wc = _check_constants(t.wavelet, wc)
    return Signal(_complex_full(t, wc).real, t.sample_rate, t.t0)


def inst_freq_from_trace(trace: np.ndarray, sample_rate: float) -> np.ndarray:
    """Instantaneous frequency (rad/s) by centered differences of the unwrapped phase."""
    phase = np.unwrap(np.angle(trace))
    if phase.size < 2:
        return np.zeros(phase.shape)
    return np.gradient(phase) * sample_rate


def reconstruct_mask(
    t: SqueezedTransform, members: np.ndarray, wc: Optional[WaveletConstants] = None
) -> Component:
    """Component from an arbitrary (bins, times) selection of the squeezed transform."""
    wc = _check_constants(t.wavelet, wc)
    if members.shape != t.t.shape:
        raise InvalidSpecError("selection mask shape does not match the transform")
    trace = np.where(members, t.mass(), 0).sum(axis=0) / wc.normalizer(t.analytic_input)
    empty = ~members.any(axis=0)
    return Component(
        complex_trace=trace,
        real_part=Signal(trace.real, t.sample_rate, t.t0),
        amp=np.abs(trace),
        inst_freq=inst_freq_from_trace(trace, t.sample_rate),
        empty=empty,
    )


def reconstruct_band(
    t: SqueezedTransform, band: Band, wc: Optional[WaveletConstants] = None
) -> Component:
    """Sum the squeezed transform over the bins whose centers fall inside ``band``.

    For real input the sum is divided by ``c_psi``, for analytic input by
    ``r_psi``; either way the trace estimates ``A exp(i phi)``.
    """
    if band.lower.size != t.n:
        raise InvalidSpecError("band length does not match the transform")
    return reconstruct_mask(t, band.members(t.grid), wc)


def remove_below_cutoff(
    t: SqueezedTransform, cutoff, wc: Optional[WaveletConstants] = None
) -> Signal:
    """Real reconstruction keeping only bins with center >= ``cutoff`` (scalar or per time)."""
    cut = np.broadcast_to(np.asarray(cutoff, dtype=float), (t.n,))
    keep = t.grid.centers[:, None] >= cut[None, :]
    return reconstruct_mask(t, keep, wc).real_part


def drift_cutoff(
    t: SqueezedTransform, drift_max: float = 2 * np.pi, offset: float = 0.5, penalty: float = 1.0
) -> np.ndarray:
    """Per-time cutoff ``omega_d(t) + offset`` above the dominant low-frequency curve.

    ``omega_d`` is the strongest ridge among bins centered below ``drift_max``
    rad/s (1 Hz by default).
    """
    if offset < 0:
        raise InvalidSpecError("offset must be nonnegative")
    count = int(np.count_nonzero(t.grid.centers < drift_max))
    if count < 2:
        raise InvalidSpecError(f"frequency grid has fewer than two bins below {drift_max:g} rad/s")
    sub = FreqGrid(t.grid.kind, t.grid.edges[: count + 1])
    ridge = extract_ridges(t.t[:count], 1, penalty, None, grid=sub)[0]
    return ridge.freq + offset


def remove_drift(
    t: SqueezedTransform,
    drift_max: float = 2 * np.pi,
    offset: float = 0.5,
    wc: Optional[WaveletConstants] = None,
) -> Signal:
    """Reconstruction with everything up to the dominant drift curve (plus offset) removed."""
    return remove_below_cutoff(t, drift_cutoff(t, drift_max, offset), wc)


def reconstruct_double_integral(
    c: CwtResult, wc: Optional[WaveletConstants] = None, mask: Optional[np.ndarray] = None
):
    """Invert the wavelet transform with the (scale, time) double integral.

    ``s(t) = Re[ sum_k sum_n W(a_k, b_n) a_k^{-5/2} psi((t - b_n)/a_k) da_k db / c_double ]``,
    with the time sum done as an FFT convolution per scale. ``mask`` (same
    shape as ``c.w``) restricts the coefficients used. Returns a
    :class:`Signal` for real input and a complex array for analytic input.
    """
    wc = _check_constants(c.wavelet, wc)
    w = c.w if mask is None else np.where(mask, c.w, 0)
    n = c.n
    length = 1 << int(np.ceil(np.log2(3 * n)))
    dt = 1.0 / c.sample_rate
    xi = 2 * np.pi * sfft.fftfreq(length, dt)
    a = c.grid.scales[:, None]
    # time-domain kernel psi(u / a) has spectrum a psi_hat(a xi); the db sum
    # times dt cancels the 1/dt of the discrete convolution
    kernel = a * spectrum(c.wavelet, a * xi[None, :])
    coef = sfft.fft(w, n=length, axis=1, workers=fft_workers())
    weight = (c.grid.scales ** -2.5 * c.grid.da)[:, None]
    rec = sfft.ifft(coef * kernel * weight, axis=1, workers=fft_workers())[:, :n].sum(axis=0)
    # the double sum returns 2 c_double times the positive-frequency part
    if c.analytic_input:
        return rec / (2 * wc.c_double)
    return Signal(rec.real / wc.c_double, c.sample_rate, c.t0)
