"""Numerical checks of the accuracy guarantees for well-separated AM-FM sums.

For ``f = sum_k A_k exp(i phi_k)`` with slowly varying ``A_k`` and ``phi_k'``
(relative rate ``eps``) and frequencies separated by a relative gap ``d``,
the wavelet transform with a wavelet supported in ``[1 - Delta, 1 + Delta]``
satisfies, with ``eps_tilde = eps**(1/3)``:

1. ``|W(a, b)| > eps_tilde`` only inside zones ``|a phi_k'(b) - 1| < Delta``;
2. on those points ``|omega(a, b) - phi_k'(b)| <= eps_tilde``;
3. the squeezed transform summed over ``|omega - phi_k'(b)| < eps_tilde``
   and divided by ``r_psi`` recovers ``A_k exp(i phi_k)`` to ``C eps_tilde``.

This module evaluates the constants and conditions behind those statements
and checks them on a computed transform. It also evaluates the variational
energy of a squeezed transform.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from .cwt import CwtResult, ScaleGrid, cwt_samples
from .exceptions import InvalidSpecError
from .signals import ImtSpec, Signal
from .squeeze import PhaseTransform, SqueezedTransform, phase_transform
from .wavelets import WaveletConstants, WaveletSpec, constants

__all__ = [
    "ImtAnalytic",
    "Check",
    "BoundReport",
    "VariationalConfig",
    "EnergyParts",
    "certify_class",
    "gamma_fields",
    "compute_gammas",
    "check_epsilon_conditions",
    "verify_theorem",
    "verification_fixture",
    "run_verification",
    "variational_energy",
    "smear_bins",
]

FLOAT_FLOOR = 1e-4


@dataclass(frozen=True, eq=False)
class ImtAnalytic:
    """Sampled components ``A_k, A_k', phi_k, phi_k', phi_k''`` on a common grid.

    Arrays have shape (K, n); components are ordered by increasing
    instantaneous frequency.
    """

    amp: np.ndarray
    amp_deriv: np.ndarray
    phase: np.ndarray
    freq: np.ndarray
    freq_deriv: np.ndarray
    sample_rate: float
    t0: float = 0.0

    def __post_init__(self):
        arrs = [np.atleast_2d(np.asarray(getattr(self, k), dtype=float))
                for k in ("amp", "amp_deriv", "phase", "freq", "freq_deriv")]
        if len({a.shape for a in arrs}) != 1:
            raise InvalidSpecError("component trajectories must share one shape")
        for name, a in zip(("amp", "amp_deriv", "phase", "freq", "freq_deriv"), arrs):
            a.setflags(write=False)
            object.__setattr__(self, name, a)

    @classmethod
    def from_specs(cls, specs: Sequence[ImtSpec], sample_rate: float, t0: float = 0.0) -> "ImtAnalytic":
        if not specs:
            raise InvalidSpecError("at least one component is required")
        order = np.argsort([float(np.mean(s.inst_freq)) for s in specs], kind="stable")
        specs = [specs[i] for i in order]
        derivs = [s.derivatives(sample_rate) for s in specs]
        return cls(
            amp=np.array([s.amplitude for s in specs]),
            amp_deriv=np.array([d[0] for d in derivs]),
            phase=np.array([s.phase for s in specs]),
            freq=np.array([s.inst_freq for s in specs]),
            freq_deriv=np.array([d[1] for d in derivs]),
            sample_rate=sample_rate,
            t0=t0,
        )

    @property
    def count(self) -> int:
        return self.amp.shape[0]

    @property
    def n(self) -> int:
        return self.amp.shape[1]

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.n) / self.sample_rate

    @property
    def slope_max(self) -> np.ndarray:
        """M''_k = sup |phi_k''| per component."""
        return np.max(np.abs(self.freq_deriv), axis=1)

    def analytic(self) -> np.ndarray:
        return np.sum(self.amp * np.exp(1j * self.phase), axis=0)

    def real_signal(self) -> Signal:
        return Signal(np.sum(self.amp * np.cos(self.phase), axis=0), self.sample_rate, self.t0)


def certify_class(spec: ImtAnalytic):
    """Tightest accuracy ``eps`` and separation ``d`` the samples satisfy.

    ``eps = max_k max_t max(|A_k'|, |phi_k''|) / phi_k'`` and
    ``d = min_t min_k (phi_k' - phi_{k-1}') / (phi_k' + phi_{k-1}')``
    (``inf`` for a single component).
    """
    freq = spec.freq
    t = spec.times
    bad = np.argwhere(~(freq > 0))
    if bad.size:
        k, n = bad[0]
        raise InvalidSpecError(
            f"component {k}: instantaneous frequency {freq[k, n]:g} <= 0 at t={t[n]:g}"
        )
    rate = np.maximum(np.abs(spec.amp_deriv), np.abs(spec.freq_deriv)) / freq
    eps = float(rate.max())
    if spec.count == 1:
        return eps, math.inf
    gap = freq[1:] - freq[:-1]
    bad = np.argwhere(~(gap > 0))
    if bad.size:
        k, n = bad[0]
        raise InvalidSpecError(
            f"components {k} and {k + 1} are not ordered by frequency at t={t[n]:g} "
            f"({freq[k, n]:g} vs {freq[k + 1, n]:g})"
        )
    d = float(np.min(gap / (freq[1:] + freq[:-1])))
    return eps, d


def gamma_fields(spec: ImtAnalytic, wc: WaveletConstants, scales, b_idx=None):
    """Gamma_1(a, b) and Gamma_2(a, b) on the grid, shape (len(scales), len(b_idx))."""
    a = np.asarray(scales, dtype=float)[:, None]
    sl = slice(None) if b_idx is None else b_idx
    amp = np.abs(spec.amp[:, sl])
    freq = np.abs(spec.freq[:, sl])
    m2 = spec.slope_max[:, None]
    s1 = freq.sum(axis=0)[None, :]
    s2 = (m2 + amp * freq).sum(axis=0)[None, :]
    s3 = (m2 * amp).sum(axis=0)[None, :]
    out = []
    for i1, i2, i3 in (wc.moments_i, wc.moments_ip):
        out.append(i1 * s1 + 0.5 * i2 * a * s2 + i3 * a * a * s3 / 6.0)
    return out[0], out[1]


def compute_gammas(spec: ImtAnalytic, wc: WaveletConstants, scales, b_idx=None):
    """Maxima of Gamma_1 and Gamma_2 over the (scale, time) grid."""
    g1, g2 = gamma_fields(spec, wc, scales, b_idx)
    return float(g1.max()), float(g2.max())


@dataclass
class Check:
    """Outcome of one inequality or property over a grid.

    ``worst`` is the worst observed value of the checked quantity,
    ``limit`` its allowed value at that point, and ``location`` holds
    ``a``, ``b`` and ``k`` where it occurred.
    """

    passed: bool
    worst: float
    limit: float = math.nan
    location: Dict = field(default_factory=dict)
    details: Dict = field(default_factory=dict)

    @property
    def margin(self) -> float:
        """``limit - worst``; positive when the check passes with room."""
        return self.limit - self.worst


@dataclass
class BoundReport:
    eps: float
    eps_tilde: float
    floor: float
    d: float
    delta: float
    gamma1: float = math.nan
    gamma2: float = math.nan
    cond1: Optional[Check] = None
    cond2: Optional[Check] = None
    cond3: Optional[Check] = None
    zone_check: Optional[Check] = None
    lemma_check: Optional[Check] = None
    if_check: Optional[Check] = None
    if_bound_check: Optional[Check] = None
    recon_check: Optional[Check] = None
    recon_constant_bracket: float = math.nan
    c_fit: float = math.nan
    separation_ok: bool = True
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        def conv(x):
            if isinstance(x, Check):
                d = asdict(x)
                d["status"] = "pass" if x.passed else "fail"
                return conv(d)
            if isinstance(x, dict):
                return {k: conv(v) for k, v in x.items()}
            if isinstance(x, (list, tuple)):
                return [conv(v) for v in x]
            if isinstance(x, (np.floating, float)):
                x = float(x)
                return x if math.isfinite(x) else str(x)
            if isinstance(x, np.integer):
                return int(x)
            if isinstance(x, np.bool_):
                return bool(x)
            return x

        out = {}
        for k in self.__dataclass_fields__:
            v = getattr(self, k)
            out[k] = conv(v)
        for k in ("zone_check", "if_check", "recon_check", "lemma_check"):
            chk = getattr(self, k)
            if chk is not None:
                out[k]["status"] = "pass" if chk.passed else "fail"
        return out


def _loc(scales, times, i, j, k=None):
    out = {"a": float(scales[i]), "b": float(times[j])}
    if k is not None:
        out["k"] = int(k)
    return out


def check_epsilon_conditions(
    spec: ImtAnalytic, wc: WaveletConstants, scales, b_idx=None
) -> BoundReport:
    """Evaluate the three smallness conditions on ``eps`` over the grid.

    1. ``eps < a^{-9/4} Gamma_1^{-3/2}`` at every (a, b);
    2. ``eps <= a^{-3/2} [Gamma_2 + a phi_k' Gamma_1]^{-3}`` for every k
       (worst case over k is reported);
    3. ``eps <= d^3 (phi_1' + phi_2')^3 / 8`` at every b, for consecutive
       component pairs; vacuous for one component.
    """
    eps, d = certify_class(spec)
    b_idx = np.arange(spec.n) if b_idx is None else np.asarray(b_idx)
    scales = np.asarray(scales, dtype=float)
    times = spec.times[b_idx]
    g1, g2 = gamma_fields(spec, wc, scales, b_idx)
    a = scales[:, None]
    report = BoundReport(
        eps=eps,
        eps_tilde=eps ** (1.0 / 3.0),
        floor=FLOAT_FLOOR * float(np.max(np.abs(spec.amp))),
        d=d,
        delta=wc.wavelet.delta if wc.wavelet.kind == "bump" else math.nan,
        gamma1=float(g1.max()),
        gamma2=float(g2.max()),
    )

    lim1 = a ** -2.25 * g1 ** -1.5
    i, j = np.unravel_index(np.argmin(lim1), lim1.shape)
    report.cond1 = Check(bool(eps < lim1.min()), eps, float(lim1[i, j]), _loc(scales, times, i, j))

    best = None
    for k in range(spec.count):
        fk = spec.freq[k, b_idx][None, :]
        lim2 = a ** -1.5 * (g2 + a * fk * g1) ** -3.0
        i, j = np.unravel_index(np.argmin(lim2), lim2.shape)
        if best is None or lim2[i, j] < best[0]:
            best = (float(lim2[i, j]), i, j, k)
    lim, i, j, k = best
    report.cond2 = Check(bool(eps <= lim), eps, lim, _loc(scales, times, i, j, k))

    if spec.count < 2:
        report.cond3 = Check(True, eps, math.inf, {}, {"note": "single component"})
    else:
        f = spec.freq[:, b_idx]
        lim3 = (d ** 3) * (f[1:] + f[:-1]) ** 3 / 8.0
        k, j = np.unravel_index(np.argmin(lim3), lim3.shape)
        report.cond3 = Check(bool(eps <= lim3.min()), eps, float(lim3[k, j]),
                             {"b": float(times[j]), "k": int(k)})
    return report


def _zones(spec: ImtAnalytic, scales, delta, b_idx):
    """Boolean (K, scales, times): |a phi_k'(b) - 1| < delta."""
    a = np.asarray(scales)[None, :, None]
    f = spec.freq[:, b_idx][:, None, :]
    return np.abs(a * f - 1) < delta


def verify_theorem(
    spec: ImtAnalytic,
    wc: WaveletConstants,
    c: CwtResult,
    p: PhaseTransform,
    interior: Optional[np.ndarray] = None,
    report: Optional[BoundReport] = None,
) -> BoundReport:
    """Check the three statements on a computed transform of the analytic sum.

    ``c`` must be the transform of ``spec.analytic()`` with a bump wavelet
    and ``p`` its phase transform at the working threshold (normally
    ``eps_tilde + floor``). ``interior`` selects the times checked.
    """
    wavelet = c.wavelet
    if wavelet.kind != "bump":
        raise InvalidSpecError("theorem checks need a compactly supported (bump) wavelet")
    if wc.wavelet != wavelet:
        raise InvalidSpecError("wavelet constants do not match the transform")
    if c.n != spec.n:
        raise InvalidSpecError("transform and component samples differ in length")
    scales = c.grid.scales
    if report is None:
        report = check_epsilon_conditions(spec, wc, scales)
    interior = np.ones(c.n, dtype=bool) if interior is None else np.asarray(interior, dtype=bool)
    b_idx = np.flatnonzero(interior)
    times = spec.times[b_idx]
    delta = wavelet.delta
    eps, eps_t, floor = report.eps, report.eps_tilde, report.floor
    tol = eps_t + floor
    report.separation_ok = bool(spec.count < 2 or delta < report.d / (1 + report.d))
    if not report.separation_ok:
        report.notes.append(
            f"Delta={delta:g} is not below d/(1+d)={report.d / (1 + report.d):.4g}; zones may overlap"
        )

    zones = _zones(spec, scales, delta, b_idx)  # (K, A, B)
    nz = zones.sum(axis=0)
    mask = p.mask[:, b_idx]
    omega = p.omega[:, b_idx]

    overlap = nz >= 2
    oi = np.argwhere(overlap)
    report.lemma_check = Check(
        passed=not overlap.any(),
        worst=float(overlap.sum()),
        limit=0.0,
        location=_loc(scales, times, *oi[0]) if oi.size else {},
        details={"points": int(nz.size)},
    )

    outside = mask & (nz == 0)
    multi = mask & (nz >= 2)
    bad = outside | multi
    bi = np.argwhere(bad)
    report.zone_check = Check(
        passed=not bad.any(),
        worst=float(bad.sum()),
        limit=0.0,
        location=_loc(scales, times, *bi[0]) if bi.size else {},
        details={
            "masked_points": int(mask.sum()),
            "outside_all_zones": int(outside.sum()),
            "in_several_zones": int(multi.sum()),
        },
    )

    # frequency error and the pre-simplification bound, on masked zone points
    g1, g2 = gamma_fields(spec, wc, scales, b_idx)
    err_if = np.full(mask.shape, -np.inf)
    if_ratio = np.full(mask.shape, -np.inf)
    which = np.full(mask.shape, -1)
    for k in range(spec.count):
        sel = mask & zones[k]
        fk = spec.freq[k, b_idx][None, :]
        e = np.where(sel, np.abs(omega - fk), -np.inf)
        if_bound = np.sqrt(scales)[:, None] * (g2 + scales[:, None] * g1 * fk) * eps ** (2 / 3) + floor
        upd = e > err_if
        err_if = np.where(upd, e, err_if)
        which = np.where(upd, k, which)
        if_ratio = np.maximum(if_ratio, np.where(sel, e / if_bound, -np.inf))
    if np.isfinite(err_if).any():
        i, j = np.unravel_index(np.argmax(err_if), err_if.shape)
        worst_if = float(err_if[i, j])
        loc = _loc(scales, times, i, j, which[i, j])
    else:
        worst_if, loc = 0.0, {}
    report.if_check = Check(bool(worst_if <= tol), worst_if, tol, loc)
    if np.isfinite(if_ratio).any():
        i, j = np.unravel_index(np.argmax(if_ratio), if_ratio.shape)
        r_if = float(if_ratio[i, j])
        loc_if = _loc(scales, times, i, j)
    else:
        r_if, loc_if = 0.0, {}
    report.if_bound_check = Check(bool(r_if <= 1.0), r_if, 1.0, loc_if,
                                   {"quantity": "observed error / (bound + floor)"})

    # reconstruction from the continuous squeeze restricted to |omega - phi_k'| < eps_tilde
    w = c.w[:, b_idx]
    weight = (scales ** -1.5 * c.grid.da)[:, None]
    worst_rec, loc_rec = 0.0, {}
    bracket = 0.0
    for k in range(spec.count):
        fk = spec.freq[k, b_idx][None, :]
        sel = mask & (np.abs(omega - fk) < tol)
        est = np.sum(np.where(sel, w * weight, 0), axis=0) / wc.r_psi
        truth = spec.amp[k, b_idx] * np.exp(1j * spec.phase[k, b_idx])
        err = np.abs(est - truth)
        j = int(np.argmax(err))
        if err[j] > worst_rec:
            worst_rec, loc_rec = float(err[j]), {"b": float(times[j]), "k": k}
        f = spec.freq[k, b_idx]
        br = 2 * tol / abs(wc.r_psi) * (delta / f + np.sqrt(f / (1 - delta)) - np.sqrt(f / (1 + delta)))
        bracket = max(bracket, float(br.max()))
    report.recon_constant_bracket = bracket
    report.c_fit = worst_rec / tol if tol > 0 else math.inf
    report.recon_check = Check(
        passed=bool(worst_rec <= bracket),
        worst=worst_rec,
        limit=bracket,
        location=loc_rec,
        details={"c_fit": report.c_fit, "threshold": tol},
    )
    return report


# --------------------------------------------------------------------------
# periodic fixtures for the checks


def verification_fixture(name: str, level: int = 0, n: int = None) -> ImtAnalytic:
    """Exactly periodic component sets used by the theorem checks.

    ``twotone``: unit tones at 8 and 40 rad/s over 8 pi seconds.
    ``modulated``: ``A = 1 + 0.01 s sin(0.1 t)``, ``phi = 40 t + 0.05 s sin(0.2 t)``
    with ``s = 2**-level``, over 20 pi seconds.
    ``closetones``: unit tones at 8 and 9 rad/s over 2 pi seconds.
    """
    if name == "twotone":
        period, n = 8 * math.pi, n or 2048
        t = np.arange(n) * period / n
        one, zero = np.ones_like(t), np.zeros_like(t)
        return ImtAnalytic(
            amp=[one, one], amp_deriv=[zero, zero], phase=[8 * t, 40 * t],
            freq=[8 * one, 40 * one], freq_deriv=[zero, zero], sample_rate=n / period,
        )
    if name == "closetones":
        period, n = 2 * math.pi, n or 1024
        t = np.arange(n) * period / n
        one, zero = np.ones_like(t), np.zeros_like(t)
        return ImtAnalytic(
            amp=[one, one], amp_deriv=[zero, zero], phase=[8 * t, 9 * t],
            freq=[8 * one, 9 * one], freq_deriv=[zero, zero], sample_rate=n / period,
        )
    if name == "modulated":
        period, n = 20 * math.pi, n or 4096
        t = np.arange(n) * period / n
        depth = 2.0 ** -level
        return ImtAnalytic(
            amp=[1 + 0.01 * depth * np.sin(0.1 * t)],
            amp_deriv=[0.001 * depth * np.cos(0.1 * t)],
            phase=[40 * t + 0.05 * depth * np.sin(0.2 * t)],
            freq=[40 + 0.01 * depth * np.cos(0.2 * t)],
            freq_deriv=[-0.002 * depth * np.sin(0.2 * t)],
            sample_rate=n / period,
        )
    raise InvalidSpecError(f"unknown verification fixture {name!r}")


def _zone_scale_grid(spec: ImtAnalytic, wavelet: WaveletSpec, voices: int, margin: float) -> ScaleGrid:
    lo = (1 - wavelet.delta) / spec.freq.max() / margin
    hi = (1 + wavelet.delta) / spec.freq.min() * margin
    lo = max(lo, wavelet.center / (math.pi * spec.sample_rate))
    hi = min(hi, spec.n / spec.sample_rate)
    return ScaleGrid.log_uniform(lo, hi, voices)


def run_verification(
    name: str = "twotone",
    wavelet: WaveletSpec = WaveletSpec("bump", 0.2),
    level: int = 0,
    voices: Optional[int] = None,
    margin: Optional[float] = None,
    grid: Optional[ScaleGrid] = None,
) -> BoundReport:
    """Build a periodic fixture, transform it and run every check.

    The modulated family defaults to a fine grid (1024 voices) hugging its
    zone, since its errors are small against the scale step otherwise.
    """
    spec = verification_fixture(name, level)
    fine = name == "modulated"
    voices = voices or (1024 if fine else 64)
    margin = margin or (1.05 if fine else 1.5)
    wc = constants(wavelet)
    if grid is None:
        grid = _zone_scale_grid(spec, wavelet, voices, margin)
    report = check_epsilon_conditions(spec, wc, grid.scales)
    c = cwt_samples(spec.analytic(), spec.sample_rate, wavelet, grid, padding="periodic")
    p = phase_transform(c, report.eps_tilde + report.floor, mode="absolute")
    return verify_theorem(spec, wc, c, p, report=report)


# --------------------------------------------------------------------------
# variational energy


@dataclass(frozen=True)
class VariationalConfig:
    """Weights of the transport, L2 and sparsity terms."""

    mu: float = 1.0
    gamma_l2: float = 0.0
    lambda_sparse: float = 0.0

    def __post_init__(self):
        for k in ("mu", "gamma_l2", "lambda_sparse"):
            v = getattr(self, k)
            if not (math.isfinite(v) and v >= 0):
                raise InvalidSpecError(f"{k} must be finite and nonnegative")


@dataclass(frozen=True)
class EnergyParts:
    fidelity: float
    transport: float
    l2: float
    sparsity: float

    @property
    def total(self) -> float:
        return self.fidelity + self.transport + self.l2 + self.sparsity


def _density(F: SqueezedTransform, wc: WaveletConstants) -> np.ndarray:
    # F(t, omega) per rad/s with Re sum_l F dw_l reconstructing the signal
    return F.density() / wc.normalizer(F.analytic_input)


def variational_energy(
    F: SqueezedTransform,
    s: Signal,
    cfg: VariationalConfig = VariationalConfig(),
    wc: Optional[WaveletConstants] = None,
    density: Optional[np.ndarray] = None,
    times: Optional[np.ndarray] = None,
) -> EnergyParts:
    """Discretized energy of a time-frequency density.

    fidelity  = sum_n |Re sum_l F dw_l - s_n|^2 dt
    transport = mu sum_n sum_l |D_t F - i w~_l F|^2 dt dw_l
    l2        = gamma sum |F|^2 dt dw
    sparsity  = lambda sum_n (sum_l |F| dw_l)^2 dt

    ``D_t`` is the centered difference on interior samples and
    ``w~ = sin(w dt) / dt`` its symbol, so ``exp(i w t)`` lines are exactly
    transported. ``density`` overrides the density derived from ``F``;
    ``times`` (boolean per sample) restricts every time sum.
    """
    wc = wc or constants(F.wavelet)
    if s.n != F.n:
        raise InvalidSpecError("signal and transform lengths differ")
    dens = _density(F, wc) if density is None else np.asarray(density)
    if dens.shape != F.t.shape:
        raise InvalidSpecError("density shape does not match the transform")
    sel = np.ones(F.n, dtype=bool) if times is None else np.asarray(times, dtype=bool)
    if sel.shape != (F.n,):
        raise InvalidSpecError("time selection length does not match the transform")
    dt = 1.0 / F.sample_rate
    dw = F.grid.widths
    rec = (dens * dw[:, None]).sum(axis=0).real
    fidelity = float(np.sum(((rec - s.samples) ** 2)[sel]) * dt)
    transport = 0.0
    if F.n >= 3 and cfg.mu > 0:
        sym = np.sin(F.grid.centers * dt) / dt
        dF = (dens[:, 2:] - dens[:, :-2]) / (2 * dt)
        resid = dF - 1j * sym[:, None] * dens[:, 1:-1]
        per_time = (np.abs(resid) ** 2 * dw[:, None]).sum(axis=0)
        transport = float(cfg.mu * np.sum(per_time[sel[1:-1]]) * dt)
    l2 = float(cfg.gamma_l2 * np.sum((np.abs(dens) ** 2 * dw[:, None]).sum(axis=0)[sel]) * dt)
    sparsity = float(cfg.lambda_sparse * np.sum(((np.abs(dens) * dw[:, None]).sum(axis=0) ** 2)[sel]) * dt)
    return EnergyParts(fidelity, transport, l2, sparsity)


def smear_bins(F: SqueezedTransform, half: int = 5, wc: Optional[WaveletConstants] = None) -> np.ndarray:
    """Density (as used by :func:`variational_energy`) with each column's mass
    spread uniformly over ``2*half+1`` neighbouring bins."""
    wc = wc or constants(F.wavelet)
    mass = F.mass()
    out = np.zeros_like(mass)
    nb = mass.shape[0]
    for off in range(-half, half + 1):
        src = slice(max(0, -off), min(nb, nb - off))
        dst = slice(max(0, off), min(nb, nb + off))
        out[dst] += mass[src] / (2 * half + 1)
    return out / F.grid.widths[:, None] / wc.normalizer(F.analytic_input)
