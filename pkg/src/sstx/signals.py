"""Signal containers, synthetic fixtures, noise injection and CSV I/O."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

import numpy as np

from .exceptions import InvalidSpecError, SignalFormatError

__all__ = [
    "Signal",
    "ImtSpec",
    "NoiseConfig",
    "synth_imt",
    "fixture",
    "FIXTURES",
    "three_cosine_sum",
    "noise_scale",
    "add_noise",
    "snr_db",
    "load_csv",
    "save_csv",
]


def _frozen(x, dtype=np.float64) -> np.ndarray:
    arr = np.array(x, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class Signal:
    """Uniformly sampled real time series.

    Sample ``n`` sits at time ``t0 + n / sample_rate`` seconds.
    """

    samples: np.ndarray
    sample_rate: float
    t0: float = 0.0

    def __post_init__(self):
        samples = _frozen(self.samples)
        if samples.ndim != 1:
            raise InvalidSpecError(f"samples must be 1-D, got shape {samples.shape}")
        if samples.size == 0:
            raise InvalidSpecError("samples must be non-empty")
        rate = float(self.sample_rate)
        if not math.isfinite(rate) or rate <= 0:
            raise InvalidSpecError(f"sample_rate must be finite and positive, got {self.sample_rate}")
        if not math.isfinite(float(self.t0)):
            raise InvalidSpecError("t0 must be finite")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate", rate)
        object.__setattr__(self, "t0", float(self.t0))

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def dt(self) -> float:
        return 1.0 / self.sample_rate

    @property
    def duration(self) -> float:
        """Length of the sampled interval, ``n / sample_rate``."""
        return self.n / self.sample_rate

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.n) / self.sample_rate

    def with_samples(self, samples) -> "Signal":
        return Signal(samples, self.sample_rate, self.t0)

    def __len__(self):
        return self.n


@dataclass(frozen=True, eq=False)
class ImtSpec:
    """One AM-FM component ``A(t) cos(phi(t))`` sampled on a time grid.

    ``inst_freq`` is phi'(t) in rad/s. ``amp_deriv`` and ``if_deriv`` (A' and
    phi'') are optional; when absent they are estimated by finite differences
    through :meth:`derivatives`.
    """

    amplitude: np.ndarray
    phase: np.ndarray
    inst_freq: np.ndarray
    amp_deriv: Optional[np.ndarray] = None
    if_deriv: Optional[np.ndarray] = None

    def __post_init__(self):
        amp = _frozen(self.amplitude)
        phase = _frozen(self.phase)
        freq = _frozen(self.inst_freq)
        if not (amp.ndim == phase.ndim == freq.ndim == 1):
            raise InvalidSpecError("trajectories must be 1-D")
        if not (amp.size == phase.size == freq.size):
            raise InvalidSpecError(
                f"trajectory lengths differ: amplitude {amp.size}, phase {phase.size}, "
                f"inst_freq {freq.size}"
            )
        if np.any(amp < 0):
            raise InvalidSpecError("amplitude must be nonnegative")
        bad = np.flatnonzero(~(freq > 0))
        if bad.size:
            raise InvalidSpecError(
                f"instantaneous frequency must be positive; violated at sample {bad[0]}"
            )
        object.__setattr__(self, "amplitude", amp)
        object.__setattr__(self, "phase", phase)
        object.__setattr__(self, "inst_freq", freq)
        for name in ("amp_deriv", "if_deriv"):
            val = getattr(self, name)
            if val is not None:
                val = _frozen(val)
                if val.shape != amp.shape:
                    raise InvalidSpecError(f"{name} length differs from amplitude")
                object.__setattr__(self, name, val)

    @classmethod
    def from_functions(
        cls,
        t: np.ndarray,
        amplitude: Callable,
        phase: Callable,
        inst_freq: Callable,
        amp_deriv: Optional[Callable] = None,
        if_deriv: Optional[Callable] = None,
    ) -> "ImtSpec":
        t = np.asarray(t, dtype=float)

        def ev(f):
            return None if f is None else np.broadcast_to(np.asarray(f(t), float), t.shape)

        return cls(ev(amplitude), ev(phase), ev(inst_freq), ev(amp_deriv), ev(if_deriv))

    def __len__(self):
        return self.amplitude.size

    def derivatives(self, sample_rate: float) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(A', phi'')``, using finite differences where not supplied."""
        da = self.amp_deriv
        if da is None:
            da = np.gradient(self.amplitude) * sample_rate
        dphi = self.if_deriv
        if dphi is None:
            dphi = np.gradient(self.inst_freq) * sample_rate
        return np.asarray(da), np.asarray(dphi)

    def if_slope_max(self, sample_rate: float) -> float:
        """sup |phi''| over the samples."""
        return float(np.max(np.abs(self.derivatives(sample_rate)[1])))

    def samples(self) -> np.ndarray:
        return self.amplitude * np.cos(self.phase)

    def analytic(self) -> np.ndarray:
        return self.amplitude * np.exp(1j * self.phase)


@dataclass(frozen=True)
class NoiseConfig:
    """Gaussian white noise at a target SNR in dB.

    Noise is drawn from ``numpy.random.default_rng(seed)`` (PCG64) with
    ``standard_normal``, so a fixed seed gives an identical sequence.
    """

    snr_db: float
    seed: int = 0

    def __post_init__(self):
        if not math.isfinite(self.snr_db):
            raise InvalidSpecError("snr_db must be finite")
        if int(self.seed) != self.seed or self.seed < 0:
            raise InvalidSpecError("seed must be a nonnegative integer")


def synth_imt(specs: Sequence[ImtSpec], sample_rate: float, t0: float, n: int) -> Signal:
    """Sum ``A_k cos(phi_k)`` over the components on an ``n``-sample grid."""
    out = np.zeros(int(n))
    for k, spec in enumerate(specs):
        if len(spec) != n:
            raise InvalidSpecError(f"component {k} has {len(spec)} samples, expected {n}")
        out += spec.samples()
    return Signal(out, sample_rate, t0)


# --------------------------------------------------------------------------
# fixtures


def _grid(sample_rate, duration, t0=0.0):
    n = int(round(duration * sample_rate))
    if n < 2:
        raise InvalidSpecError("duration too short for the sample rate")
    return t0 + np.arange(n) / sample_rate


def _const(v):
    return lambda t: np.full_like(t, v)


def _harmonic8(t):
    return [ImtSpec.from_functions(t, _const(1.0), lambda t: 8 * t - np.pi / 2, _const(8.0),
                                   _const(0.0), _const(0.0))]


def _chirp(t):
    return [ImtSpec.from_functions(t, _const(1.0), lambda t: 8 * t + t**2, lambda t: 8 + 2 * t,
                                   _const(0.0), _const(2.0))]


def _crossover(t):
    return [
        ImtSpec.from_functions(t, _const(1.0), lambda t: t**2 + t + np.cos(t),
                               lambda t: 2 * t + 1 - np.sin(t), _const(0.0),
                               lambda t: 2 - np.cos(t)),
        ImtSpec.from_functions(t, _const(1.0), lambda t: 8 * t, _const(8.0),
                               _const(0.0), _const(0.0)),
    ]


def _three_cosine(t, omega=40.0, gamma=2.0):
    return [ImtSpec.from_functions(
        t,
        lambda t: 2 + np.cos(gamma * t / 2) ** 2,
        lambda t: omega * t,
        _const(omega),
        lambda t: -0.5 * gamma * np.sin(gamma * t),
        _const(0.0),
    )]


def three_cosine_sum(t, omega=40.0, gamma=2.0) -> np.ndarray:
    """The three-tone form of the modulated cosine: 2.5 cos(w t) + 0.25 cos((w +- g) t)."""
    t = np.asarray(t, dtype=float)
    return (2.5 * np.cos(omega * t) + 0.25 * np.cos((omega + gamma) * t)
            + 0.25 * np.cos((omega - gamma) * t))


def _twotone(t):
    return [
        ImtSpec.from_functions(t, _const(1.0), lambda t: 8 * t, _const(8.0), _const(0.0), _const(0.0)),
        ImtSpec.from_functions(t, _const(1.0), lambda t: 40 * t, _const(40.0), _const(0.0), _const(0.0)),
    ]


def _toy_pair(t):
    # s1 lives on [0, 5pi/2], s2 on [2pi, 4pi]; zero amplitude elsewhere. The
    # linear trend 0.5 t of s1 is not an oscillatory component, so the returned
    # ground truth lists only the two AM-FM parts and the signal adds the trend.
    on1 = ((t >= 0) & (t <= 2.5 * np.pi)).astype(float)
    on2 = ((t >= 2 * np.pi) & (t <= 4 * np.pi)).astype(float)
    c1 = ImtSpec.from_functions(t, lambda t: on1, lambda t: 20 * t, _const(20.0),
                                _const(0.0), _const(0.0))
    c2 = ImtSpec.from_functions(
        t,
        lambda t: on2,
        lambda t: 4 / 3 * ((t - 10) ** 3 - (2 * np.pi - 10) ** 3) + 10 * (t - 2 * np.pi),
        lambda t: 4 * (t - 10) ** 2 + 10,
        _const(0.0),
        lambda t: 8 * (t - 10),
    )
    return [c1, c2]


def _toy_trend(t):
    return np.where((t >= 0) & (t <= 2.5 * np.pi), 0.5 * t, 0.0)


FIXTURES = {
    "harmonic8": (_harmonic8, 10.0),
    "chirp": (_chirp, 10.0),
    "crossover": (_crossover, 10.0),
    "fig1_toy": (_toy_pair, 4 * np.pi),
    "three_cosine": (_three_cosine, 10.0),
    "twotone": (_twotone, 10.0),
}


def fixture(name: str, sample_rate: float = 100.0, duration: Optional[float] = None):
    """Build a named test signal and its ground-truth components.

    Returns ``(Signal, list[ImtSpec])``. Available names are the keys of
    :data:`FIXTURES`; each has a default duration used when ``duration`` is
    None.
    """
    try:
        builder, default_dur = FIXTURES[name]
    except KeyError:
        raise InvalidSpecError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    if duration is None:
        duration = default_dur
    if not duration > 0:
        raise InvalidSpecError("duration must be positive")
    t = _grid(sample_rate, duration)
    specs = builder(t)
    s = synth_imt(specs, sample_rate, 0.0, t.size)
    if name == "fig1_toy":
        s = s.with_samples(s.samples + _toy_trend(t))
    return s, specs


# --------------------------------------------------------------------------
# noise


def noise_scale(s: Signal, snr: float) -> float:
    """Standard deviation c with ``10 log10(Var s / c**2) = snr``."""
    if not math.isfinite(snr):
        raise InvalidSpecError("snr_db must be finite")
    var = float(np.var(s.samples))
    if not var > 0:
        raise InvalidSpecError("signal has zero variance; SNR is undefined")
    return math.sqrt(var / 10 ** (snr / 10))


def add_noise(s: Signal, cfg: NoiseConfig) -> Signal:
    c = noise_scale(s, cfg.snr_db)
    x = np.random.default_rng(cfg.seed).standard_normal(s.n)
    return s.with_samples(s.samples + c * x)


def snr_db(clean: Signal, noisy: Signal) -> float:
    """Empirical SNR of ``noisy`` relative to ``clean``."""
    noise = noisy.samples - clean.samples
    return 10 * math.log10(np.var(clean.samples) / np.var(noise))


# --------------------------------------------------------------------------
# CSV


def save_csv(s: Signal, path, header: bool = True) -> None:
    """Write ``t,value`` rows with round-trip precision."""
    data = np.column_stack([s.times, s.samples])
    with open(path, "w", newline="\n") as fh:
        if header:
            fh.write("t,value\n")
        for t, v in data:
            fh.write(f"{float(t)!r},{float(v)!r}\n")


def _parse_float(tok, row):
    try:
        v = float(tok)
    except ValueError:
        raise SignalFormatError(f"cannot parse {tok.strip()!r} as a number", row) from None
    if not math.isfinite(v):
        raise SignalFormatError("non-finite value", row)
    return v


def load_csv(path, rel_jitter: float = 1e-6) -> Signal:
    """Read a signal written by :func:`save_csv` or a compatible file.

    Two-column files carry their own time axis. A single-column file needs a
    sibling ``<stem>.json`` holding ``sample_rate`` and optionally ``t0``.
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"no such file: {path}")
    rows = []
    ncols = None
    with open(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            toks = text.split(",")
            if not rows and ncols is None:
                try:
                    float(toks[0])
                except ValueError:
                    ncols = len(toks)
                    if ncols not in (1, 2):
                        raise SignalFormatError("header must have one or two columns", lineno)
                    continue
            if ncols is None:
                ncols = len(toks)
                if ncols not in (1, 2):
                    raise SignalFormatError(f"expected 1 or 2 columns, got {ncols}", lineno)
            if len(toks) != ncols:
                raise SignalFormatError(f"expected {ncols} columns, got {len(toks)}", lineno)
            rows.append((lineno, [_parse_float(tok, lineno) for tok in toks]))
    if not rows:
        raise SignalFormatError("file contains no samples")

    if ncols == 1:
        meta_path = path.with_suffix(".json")
        if not meta_path.exists():
            raise SignalFormatError(f"single-column file needs metadata at {meta_path}")
        meta = json.loads(meta_path.read_text())
        try:
            rate = float(meta["sample_rate"])
        except (KeyError, TypeError, ValueError):
            raise SignalFormatError(f"{meta_path} lacks a numeric sample_rate") from None
        return Signal([r[1][0] for r in rows], rate, float(meta.get("t0", 0.0)))

    t = np.array([r[1][0] for r in rows])
    v = np.array([r[1][1] for r in rows])
    if t.size < 2:
        raise SignalFormatError("two-column file needs at least two rows to infer the rate")
    steps = np.diff(t)
    bad = np.flatnonzero(steps <= 0)
    if bad.size:
        raise SignalFormatError("time column is not increasing", rows[bad[0] + 1][0])
    ref = float(np.median(steps))
    bad = np.flatnonzero(np.abs(steps - ref) > rel_jitter * ref)
    if bad.size:
        raise SignalFormatError(
            f"non-uniform sampling: step {steps[bad[0]]!r} vs typical {ref!r}", rows[bad[0] + 1][0]
        )
    dt = (t[-1] - t[0]) / (t.size - 1)
    return Signal(v, 1.0 / dt, t[0])
