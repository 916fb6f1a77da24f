"""scikit-learn style estimators over the functional pipeline."""

from __future__ import annotations

from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_positive_int, check_rate, check_signal
from .cwt import CwtResult, cwt_samples, default_scale_grid
from .exceptions import InvalidSpecError
from .reconstruct import reconstruct_band, reconstruct_mask
from .ridge import band_around, extract_ridges
from .signals import Signal
from .squeeze import FreqGrid, PhaseTransform, SqueezedTransform, default_freq_grid, phase_transform, synchrosqueeze
from .wavelets import WaveletSpec, constants

__all__ = ["SynchrosqueezedCWT", "RidgeDecomposer", "analyze"]


def _wavelet(w) -> WaveletSpec:
    return w if isinstance(w, WaveletSpec) else WaveletSpec.parse(str(w))


def analyze(
    s: Signal,
    wavelet="morlet:6",
    voices: int = 32,
    freq_grid: str = "log",
    freq_bins: int = 32,
    threshold: float = 1e-8,
    threshold_mode: str = "relative",
    padding: str = "reflect",
):
    """Run transform, phase transform and squeeze; returns ``(c, p, t)``."""
    spec = _wavelet(wavelet)
    grid = default_scale_grid(s, spec, voices)
    c = cwt_samples(s.samples, s.sample_rate, spec, grid, padding, s.t0)
    p = phase_transform(c, threshold, threshold_mode)
    g = default_freq_grid(c, freq_grid, freq_bins)
    return c, p, synchrosqueeze(c, p, g)


class SynchrosqueezedCWT(TransformerMixin, BaseEstimator):
    """Synchrosqueezed wavelet transform of a single 1-D signal.

    ``fit`` fixes the scale and frequency grids for the signal length;
    ``transform`` returns the complex squeezed matrix (bins, times) and
    ``inverse_transform`` maps such a matrix back to real samples.
    """

    def __init__(
        self,
        sample_rate: float = 100.0,
        wavelet: str = "morlet:6",
        voices: int = 32,
        freq_grid: str = "log",
        freq_bins: int = 32,
        threshold: float = 1e-8,
        threshold_mode: str = "relative",
        padding: str = "reflect",
    ):
        self.sample_rate = sample_rate
        self.wavelet = wavelet
        self.voices = voices
        self.freq_grid = freq_grid
        self.freq_bins = freq_bins
        self.threshold = threshold
        self.threshold_mode = threshold_mode
        self.padding = padding

    def _signal(self, X) -> Signal:
        if isinstance(X, Signal):
            check_signal(X, self.sample_rate)
            return X
        return Signal(check_signal(X), check_rate(self.sample_rate))

    def fit(self, X, y=None):
        s = self._signal(X)
        check_positive_int(self.voices, "voices", 4)
        check_positive_int(self.freq_bins, "freq_bins")
        spec = _wavelet(self.wavelet)
        self.wavelet_ = spec
        self.constants_ = constants(spec)
        self.scale_grid_ = default_scale_grid(s, spec, self.voices)
        probe = CwtResult(
            w=np.zeros((len(self.scale_grid_), s.n), complex),
            dwdb=np.zeros((len(self.scale_grid_), s.n), complex),
            grid=self.scale_grid_, wavelet=spec, sample_rate=s.sample_rate, t0=s.t0, n=s.n,
        )
        self.freq_grid_: FreqGrid = default_freq_grid(probe, self.freq_grid, self.freq_bins)
        self.n_samples_ = s.n
        self.t0_ = s.t0
        return self

    def _run(self, X):
        check_is_fitted(self, "freq_grid_")
        s = self._signal(X)
        if s.n != self.n_samples_:
            raise InvalidSpecError(f"fitted for {self.n_samples_} samples, got {s.n}")
        c = cwt_samples(s.samples, s.sample_rate, self.wavelet_, self.scale_grid_, self.padding, s.t0)
        p = phase_transform(c, self.threshold, self.threshold_mode)
        return c, p, synchrosqueeze(c, p, self.freq_grid_)

    def transform(self, X) -> np.ndarray:
        c, p, t = self._run(X)
        self.cwt_: CwtResult = c
        self.phase_: PhaseTransform = p
        self.squeezed_: SqueezedTransform = t
        return t.t

    def inverse_transform(self, X) -> np.ndarray:
        check_is_fitted(self, "freq_grid_")
        m = np.asarray(X)
        shape = (len(self.freq_grid_), self.n_samples_)
        if m.shape != shape:
            raise InvalidSpecError(f"expected a {shape} squeezed matrix, got {m.shape}")
        mass = m * self.freq_grid_.measure[:, None]
        return (mass.sum(axis=0) / self.constants_.normalizer(False)).real

    @property
    def frequencies_(self) -> np.ndarray:
        check_is_fitted(self, "freq_grid_")
        return self.freq_grid_.centers


class RidgeDecomposer(TransformerMixin, BaseEstimator):
    """Split a signal into ridge-band components of its squeezed transform.

    ``transform`` returns an array (n_components, times) of real component
    estimates; ``inverse_transform`` sums them back.
    """

    def __init__(
        self,
        sample_rate: float = 100.0,
        n_components: int = 1,
        wavelet: str = "morlet:6",
        voices: int = 32,
        freq_bins: int = 32,
        band_bins: int = 3,
        penalty: float = 1.0,
        max_jump: Optional[int] = 3,
        threshold: float = 1e-8,
        padding: str = "reflect",
    ):
        self.sample_rate = sample_rate
        self.n_components = n_components
        self.wavelet = wavelet
        self.voices = voices
        self.freq_bins = freq_bins
        self.band_bins = band_bins
        self.penalty = penalty
        self.max_jump = max_jump
        self.threshold = threshold
        self.padding = padding

    def fit(self, X, y=None):
        check_positive_int(self.n_components, "n_components")
        check_positive_int(self.band_bins, "band_bins")
        self.sst_ = SynchrosqueezedCWT(
            sample_rate=self.sample_rate, wavelet=self.wavelet, voices=self.voices,
            freq_bins=self.freq_bins, threshold=self.threshold, padding=self.padding,
        ).fit(X)
        return self

    def transform(self, X) -> np.ndarray:
        check_is_fitted(self, "sst_")
        self.sst_.transform(X)
        t = self.sst_.squeezed_
        self.ridges_ = extract_ridges(t, self.n_components, self.penalty, self.max_jump)
        self.components_ = [
            reconstruct_band(t, band_around(r, t.grid, "bins", self.band_bins)) for r in self.ridges_
        ]
        out = np.zeros((self.n_components, t.n))
        for i, comp in enumerate(self.components_):
            out[i] = comp.real_part.samples
        return out

    def inverse_transform(self, X) -> np.ndarray:
        m = np.atleast_2d(np.asarray(X, dtype=float))
        return m.sum(axis=0)

    def residual(self, X) -> np.ndarray:
        """Part of the squeezed reconstruction of ``X`` outside every extracted band."""
        self.transform(X)
        t = self.sst_.squeezed_
        used = np.zeros(t.t.shape, dtype=bool)
        for r in self.ridges_:
            used |= band_around(r, t.grid, "bins", self.band_bins).members(t.grid)
        return reconstruct_mask(t, ~used).real_part.samples

