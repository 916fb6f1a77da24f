"""Baseline empirical mode decomposition by sifting."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

import numpy as np
from scipy.interpolate import CubicSpline

from .exceptions import InvalidSpecError, TooFewExtremaError
from .signals import Signal

__all__ = ["SiftConfig", "ImfSet", "envelope_mean", "emd_decompose", "local_extrema", "zero_crossings"]


@dataclass(frozen=True)
class SiftConfig:
    """Sifting controls.

    Sifting of one IMF stops when ``sum (r_prev - r)**2 / sum r_prev**2`` drops
    below ``sd_stop`` and the extrema and zero-crossing counts differ by at
    most two. After ``max_sift_iters`` passes the SD test is dropped and
    sifting continues only until the counts agree (at most
    ``count_sift_iters`` further passes).
    """

    max_sift_iters: int = 10
    sd_stop: float = 0.2
    max_imfs: int = 8
    count_sift_iters: int = 200

    def __post_init__(self):
        if not (self.max_sift_iters > 0 and self.sd_stop > 0 and self.max_imfs > 0):
            raise InvalidSpecError("sift configuration values must be positive")
        if self.count_sift_iters < 0:
            raise InvalidSpecError("count_sift_iters must be nonnegative")


@dataclass(frozen=True, eq=False)
class ImfSet:
    imfs: List[Signal]
    residual: Signal

    def total(self) -> np.ndarray:
        out = self.residual.samples.copy()
        for imf in self.imfs:
            out = out + imf.samples
        return out


def local_extrema(x: np.ndarray):
    """Indices of strict local maxima and minima (plateaus count once, at their middle)."""
    x = np.asarray(x, dtype=float)
    d = np.diff(x)
    nz = np.flatnonzero(d != 0)
    if nz.size < 2:
        return np.array([], dtype=int), np.array([], dtype=int)
    sgn = np.sign(d[nz])
    turn = np.flatnonzero(sgn[:-1] != sgn[1:])
    # plateau between nz[turn] + 1 and nz[turn + 1]
    idx = (nz[turn] + 1 + nz[turn + 1]) // 2
    is_max = sgn[turn] > 0
    return idx[is_max], idx[~is_max]


def zero_crossings(x: np.ndarray) -> int:
    s = np.sign(np.asarray(x, dtype=float))
    s = s[s != 0]
    return int(np.count_nonzero(s[:-1] != s[1:]))


def _envelope(t, idx, values):
    # mirror the two extrema nearest each end about that end
    tl, tr = t[0], t[-1]
    ti = t[idx]
    vi = values[idx]
    left_t = 2 * tl - ti[1::-1]
    right_t = 2 * tr - ti[:-3:-1]
    knots = np.concatenate([left_t, ti, right_t])
    vals = np.concatenate([vi[1::-1], vi, vi[:-3:-1]])
    order = np.argsort(knots, kind="stable")
    knots, vals = knots[order], vals[order]
    keep = np.concatenate([[True], np.diff(knots) > 0])
    return CubicSpline(knots[keep], vals[keep], bc_type="natural")(t)


def _envelope_mean(t: np.ndarray, x: np.ndarray) -> np.ndarray:
    maxima, minima = local_extrema(x)
    if maxima.size < 2 or minima.size < 2:
        raise TooFewExtremaError(
            f"need at least 2 maxima and 2 minima, found {maxima.size} and {minima.size}"
        )
    return 0.5 * (_envelope(t, maxima, x) + _envelope(t, minima, x))


def envelope_mean(s: Signal) -> Signal:
    """Mean of the upper and lower natural-cubic-spline envelopes."""
    return s.with_samples(_envelope_mean(s.times, s.samples))


def _counts_agree(r) -> bool:
    maxima, minima = local_extrema(r)
    return abs(maxima.size + minima.size - zero_crossings(r)) <= 2


def _sift(t, r, cfg):
    for i in range(cfg.max_sift_iters + cfg.count_sift_iters):
        if i >= cfg.max_sift_iters and _counts_agree(r):
            break
        try:
            m = _envelope_mean(t, r)
        except TooFewExtremaError:
            break
        denom = float(np.sum(r * r))
        sd = float(np.sum(m * m)) / denom if denom > 0 else 0.0
        r = r - m
        if sd < cfg.sd_stop and _counts_agree(r):
            break
    return r


def emd_decompose(s: Signal, cfg: SiftConfig = SiftConfig()) -> ImfSet:
    """Split ``s`` into IMFs plus a residual; ``sum(imfs) + residual == s`` exactly."""
    t = s.times
    x = s.samples
    imfs = []
    acc = np.zeros_like(x)
    resid = x.copy()
    while len(imfs) < cfg.max_imfs:
        maxima, minima = local_extrema(resid)
        if maxima.size + minima.size < 3 or maxima.size < 2 or minima.size < 2:
            break
        imf = _sift(t, resid, cfg)
        imfs.append(s.with_samples(imf))
        acc = acc + imf
        resid = x - acc
    return ImfSet(imfs, s.with_samples(resid))
