"""Analytic wavelets defined by their spectra, and derived constants.

Fourier convention used throughout the package::

    f_hat(xi) = integral f(t) exp(-i xi t) dt
    f(t)      = (1 / 2 pi) integral f_hat(xi) exp(i xi t) dxi

Both wavelet kinds are normalized so that the peak of the spectrum is 1.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np
from scipy import fft as sfft

from .exceptions import InvalidSpecError, QuadratureError

__all__ = [
    "WaveletSpec",
    "QuadConfig",
    "WaveletConstants",
    "spectrum",
    "constants",
    "time_domain",
]

# Morlet spectra are cut to zero at xi <= 0. The jump there is below 2e-8 for
# omega0 >= 6, but it makes integrals against 1/xi logarithmically divergent,
# so spectral integrals for Morlet start here instead of at 0.
MORLET_XI_FLOOR = 1e-8
# Morlet passband edges: spectrum above exp(-4.5) ~ 1.1% of its peak.
MORLET_HALF_BAND = 3.0
# Upper frequency where the Morlet spectrum falls to exp(-18) ~ 1.5e-8, the
# level of its own cutoff at 0. The smallest scale puts this at Nyquist so the
# sampled kernel has no jump there; a visible jump rings across the record.
MORLET_LIMIT_OFFSET = 6.0


@dataclass(frozen=True)
class WaveletSpec:
    """Wavelet selector: ``bump`` with half-width ``delta`` or ``morlet`` with ``omega0``."""

    kind: str = "morlet"
    delta: float = 0.25
    omega0: float = 6.0

    def __post_init__(self):
        if self.kind not in ("bump", "morlet"):
            raise InvalidSpecError(f"unknown wavelet kind {self.kind!r}")
        if self.kind == "bump" and not 0 < self.delta < 1:
            raise InvalidSpecError(f"bump delta must lie in (0, 1), got {self.delta}")
        if self.kind == "morlet" and not self.omega0 > MORLET_HALF_BAND:
            raise InvalidSpecError(f"morlet omega0 must exceed {MORLET_HALF_BAND}, got {self.omega0}")
        object.__setattr__(self, "delta", float(self.delta))
        object.__setattr__(self, "omega0", float(self.omega0))

    @classmethod
    def parse(cls, text: str) -> "WaveletSpec":
        """Parse ``"bump:0.25"`` or ``"morlet:6.0"``."""
        kind, _, value = str(text).partition(":")
        kind = kind.strip().lower()
        try:
            if kind == "bump":
                return cls("bump", delta=float(value) if value else 0.25)
            if kind == "morlet":
                return cls("morlet", omega0=float(value) if value else 6.0)
        except ValueError:
            raise InvalidSpecError(f"bad wavelet parameter in {text!r}") from None
        raise InvalidSpecError(f"unknown wavelet {text!r}; use bump:<delta> or morlet:<omega0>")

    def __str__(self):
        if self.kind == "bump":
            return f"bump:{self.delta:g}"
        return f"morlet:{self.omega0:g}"

    @property
    def center(self) -> float:
        """Peak frequency of the spectrum."""
        return 1.0 if self.kind == "bump" else self.omega0

    @property
    def passband(self) -> tuple[float, float]:
        """Frequency interval carrying the spectrum (exact support for bump)."""
        if self.kind == "bump":
            return 1.0 - self.delta, 1.0 + self.delta
        return self.omega0 - MORLET_HALF_BAND, self.omega0 + MORLET_HALF_BAND

    @property
    def band_limit(self) -> float:
        """Highest frequency where the spectrum is not negligible (unit scale)."""
        if self.kind == "bump":
            return 1.0 + self.delta
        return self.omega0 + MORLET_LIMIT_OFFSET

    def integration_range(self) -> tuple[float, float]:
        if self.kind == "bump":
            return 1.0 - self.delta, 1.0 + self.delta
        return MORLET_XI_FLOOR, self.omega0 + 12.0


def spectrum(spec: WaveletSpec, xi) -> np.ndarray:
    """Evaluate the wavelet spectrum at ``xi`` (scalar or array)."""
    xi = np.asarray(xi, dtype=float)
    if spec.kind == "bump":
        x = (xi - 1.0) / spec.delta
        inside = np.abs(x) < 1
        out = np.zeros(xi.shape)
        xs = x[inside]
        out[inside] = np.exp(1.0 - 1.0 / (1.0 - xs * xs))
        return out if out.ndim else float(out)
    out = np.where(xi > 0, np.exp(-0.5 * (xi - spec.omega0) ** 2), 0.0)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class QuadConfig:
    """Quadrature controls for :func:`constants`.

    ``nodes`` is the node count for the spectral integrals (log-frequency
    trapezoid). ``tail_tol`` is the relative change allowed when the time
    window used for the moments doubles. ``max_halfwidth`` caps that window,
    in units of the wavelet's natural time scale.
    """

    nodes: int = 2**12
    tail_tol: float = 1e-8
    max_halfwidth: float = 2.0**15

    def __post_init__(self):
        if self.nodes < 2**12:
            raise InvalidSpecError("at least 4096 quadrature nodes are required")
        if not self.tail_tol > 0:
            raise InvalidSpecError("tail_tol must be positive")


@dataclass(frozen=True)
class WaveletConstants:
    """Constants derived from a wavelet spectrum.

    c_psi:
        Reconstruction constant for real signals: ``1/2 int_0^inf conj(psi_hat(xi))/xi``.
        A real signal is recovered as ``Re[sum_k W a^{-3/2} da / c_psi]``.
    r_psi:
        ``int psi_hat(z)/z dz``, the constant recovering a complex analytic
        component ``A exp(i phi)`` from its own transform. ``r_psi = 2 conj(c_psi)``.
    c_double:
        Constant of the double-integral (scale, time) inversion,
        ``1/2 int |psi_hat(xi)|^2 / xi dxi``.
    moments_i, moments_ip:
        ``I_n = int |u|^n |psi(u)| du`` and the same for psi', n = 1, 2, 3.
    moment_tail:
        Largest relative change of any moment on the last window doubling.
    time_spread:
        RMS width of ``|psi|``, ``sqrt(I_2 / I_0)``; the cone of influence of
        scale ``a`` is ``5 * time_spread * a`` on each side.
    """

    wavelet: WaveletSpec
    c_psi: complex
    r_psi: complex
    c_double: float
    moments_i: tuple
    moments_ip: tuple
    moment_tail: float
    time_spread: float

    def normalizer(self, analytic_input: bool) -> complex:
        """Constant dividing band sums: ``r_psi`` for analytic input, ``c_psi`` for real input."""
        return self.r_psi if analytic_input else self.c_psi


def _log_trapezoid(f, lo, hi, nodes):
    """Integrate ``f(xi)/xi`` over [lo, hi] as a trapezoid in ``log xi``."""
    u = np.linspace(math.log(lo), math.log(hi), nodes)
    vals = f(np.exp(u))
    h = u[1] - u[0]
    return h * (vals.sum() - 0.5 * (vals[0] + vals[-1]))


def _spectral_integral(f, spec, nodes):
    lo, hi = spec.integration_range()
    coarse = _log_trapezoid(f, lo, hi, nodes)
    fine = _log_trapezoid(f, lo, hi, 2 * nodes - 1)
    change = abs(fine - coarse) / abs(fine)
    if not change < 1e-8:
        raise QuadratureError(
            f"spectral integral for {spec} did not converge (relative change {change:.2e})",
            achieved=change,
        )
    return fine


def _time_unit(spec):
    # psi(u) spreads over |u| ~ 1/delta for bump, ~1 for Morlet.
    return 1.0 / spec.delta if spec.kind == "bump" else 1.0


_PI_LD = np.longdouble("3.14159265358979323846264338327950288")


def _spectrum_ld(spec, xi):
    if spec.kind == "bump":
        x = (xi - 1) / np.longdouble(spec.delta)
        out = np.zeros(xi.shape, dtype=np.longdouble)
        inside = np.abs(x) < 1
        xs = x[inside]
        out[inside] = np.exp(1 - 1 / (1 - xs * xs))
        return out
    return np.where(xi > 0, np.exp(-(xi - np.longdouble(spec.omega0)) ** 2 / 2), 0)


def time_domain(spec: WaveletSpec, halfwidth: float, step: float = None):
    """Sample psi and psi' on ``u in [-halfwidth, halfwidth)`` via inverse FFT.

    The transform runs in extended precision (``numpy.longdouble``) because
    the bump's tail falls below double-precision round-off long before its
    contribution to the third moment does. The step defaults to half the
    Nyquist spacing of the spectral support.
    """
    top = spec.integration_range()[1]
    if step is None:
        step = math.pi / (2.0 * top)
    m = int(2 ** math.ceil(math.log2(2 * halfwidth / step)))
    k = np.arange(m)
    h = np.longdouble(step)
    xi = 2 * _PI_LD * sfft.fftfreq(m).astype(np.longdouble) / h
    ph = _spectrum_ld(spec, xi)
    # centre u = 0 at index m/2: a shift by m/2 samples is (-1)^k for even m
    ph = ph * np.where(k % 2 == 0, 1, -1).astype(np.longdouble)
    psi = sfft.ifft(ph) / h
    dpsi = sfft.ifft(1j * xi * ph) / h
    u = (k - m // 2) * h
    return u, psi, dpsi


def _moments(u, psi, dpsi, step):
    au = np.abs(u)
    apsi, adpsi = np.abs(psi), np.abs(dpsi)
    mi = tuple(float(np.sum(au**n * apsi) * step) for n in (0, 1, 2, 3))
    mp = tuple(float(np.sum(au**n * adpsi) * step) for n in (1, 2, 3))
    return mi, mp


def _moment_table(spec: WaveletSpec, quad: QuadConfig):
    unit = _time_unit(spec)
    if spec.kind == "morlet":
        # The cutoff at xi = 0 leaves a |psi| ~ 1/u tail of height ~1e-9, so the
        # higher moments diverge slowly. Report them on a fixed 40-unit window.
        u, psi, dpsi = time_domain(spec, 40.0 * unit)
        mi, mp = _moments(u, psi, dpsi, u[1] - u[0])
        u2, psi2, dpsi2 = time_domain(spec, 80.0 * unit)
        mi2, mp2 = _moments(u2, psi2, dpsi2, u2[1] - u2[0])
        tail = max(abs(a - b) / b for a, b in zip(mi[1:] + mp, mi2[1:] + mp2))
        return mi, mp, tail

    # bump: double the window until every moment settles
    half = 40.0 * unit
    u, psi, dpsi = time_domain(spec, half)
    prev = _moments(u, psi, dpsi, u[1] - u[0])
    best = (math.inf, prev)
    while half < quad.max_halfwidth * unit:
        half *= 2
        u, psi, dpsi = time_domain(spec, half)
        cur = _moments(u, psi, dpsi, u[1] - u[0])
        tail = max(abs(a - b) / b for a, b in zip(prev[0][1:] + prev[1], cur[0][1:] + cur[1]))
        if tail < best[0]:
            best = (tail, cur)
        if tail < quad.tail_tol:
            return cur[0], cur[1], tail
        if tail > 100 * best[0]:
            break
        prev = cur
    raise QuadratureError(
        f"moment tails for {spec} did not reach {quad.tail_tol:.1e}; "
        f"best relative change {best[0]:.2e}",
        achieved=best[0],
    )


@functools.lru_cache(maxsize=32)
def _constants_cached(spec: WaveletSpec, quad: QuadConfig) -> WaveletConstants:
    c_psi = 0.5 * _spectral_integral(lambda x: spectrum(spec, x), spec, quad.nodes)
    r_psi = _spectral_integral(lambda x: spectrum(spec, x), spec, quad.nodes)
    c_double = 0.5 * _spectral_integral(lambda x: spectrum(spec, x) ** 2, spec, quad.nodes)
    mi, mp, tail = _moment_table(spec, quad)
    values = (c_psi, r_psi, c_double) + mi + mp
    if not all(math.isfinite(v) and v > 0 for v in values):
        raise QuadratureError(f"non-finite or nonpositive constant for {spec}: {values}")
    return WaveletConstants(
        wavelet=spec,
        c_psi=complex(c_psi),
        r_psi=complex(r_psi),
        c_double=float(c_double),
        moments_i=mi[1:],
        moments_ip=mp,
        moment_tail=float(tail),
        time_spread=math.sqrt(mi[2] / mi[0]),
    )


def constants(spec: WaveletSpec, quad: QuadConfig = None) -> WaveletConstants:
    """Compute :class:`WaveletConstants` for ``spec``.

    Raises :class:`QuadratureError` when a spectral integral changes by more
    than 1e-8 relative on doubling the node count, or when the moment tails
    do not settle below ``quad.tail_tol`` (bump only; see ``moment_tail``).
    """
    return _constants_cached(spec, quad or QuadConfig())
