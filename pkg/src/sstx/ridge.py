"""Ridge (instantaneous-frequency curve) extraction by dynamic programming."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np

from .exceptions import InvalidSpecError
from .squeeze import FreqGrid, SqueezedTransform

__all__ = ["Ridge", "Band", "RidgeWarning", "extract_ridges", "band_around", "track_ridge"]


class RidgeWarning(UserWarning):
    """Fewer ridges than requested could be extracted."""


@dataclass(frozen=True, eq=False)
class Ridge:
    """One curve through the bins: frequency, bin index and |T| per time."""

    freq: np.ndarray
    bin_index: np.ndarray
    energy: np.ndarray

    def __len__(self):
        return self.bin_index.size


@dataclass(frozen=True, eq=False)
class Band:
    """Per-time frequency interval ``[lower, upper]`` (rad/s) around a ridge."""

    ridge: Ridge
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        if not np.all(self.upper > self.lower):
            raise InvalidSpecError("band must have positive width at every time")

    @property
    def halfwidth(self) -> np.ndarray:
        return 0.5 * (self.upper - self.lower)

    def members(self, grid: FreqGrid) -> np.ndarray:
        """Boolean matrix (bins, times): bin center inside the band."""
        c = grid.centers[:, None]
        return (c >= self.lower[None, :]) & (c <= self.upper[None, :])


def _jump_penalty(grid: FreqGrid, offsets: np.ndarray, penalty: float) -> np.ndarray:
    """Penalty matrix (len(offsets), bins) for moving from bin l to bin l+offset."""
    logc = np.log(np.maximum(grid.centers, 1e-300))
    unit = grid.log_spacing
    nb = logc.size
    out = np.full((offsets.size, nb), np.inf)
    for i, j in enumerate(offsets):
        src = np.arange(nb)
        dst = src + j
        ok = (dst >= 0) & (dst < nb)
        out[i, ok] = penalty * ((logc[dst[ok]] - logc[src[ok]]) / unit) ** 2
    return out


def track_ridge(
    payoff: np.ndarray,
    grid: FreqGrid,
    penalty: float = 1.0,
    max_jump: Optional[int] = 3,
) -> np.ndarray:
    """Best path through ``payoff`` (bins, times); returns bin index per time.

    Maximizes ``sum payoff[path[n], n] - penalty * sum (dlog omega / unit)**2``
    where ``unit`` is the grid's log spacing, with ``|path[n+1] - path[n]|``
    at most ``max_jump`` (None: unbounded). Cells with payoff ``-inf`` are
    never visited unless a whole column is ``-inf``.
    """
    nb, n = payoff.shape
    if max_jump is None:
        logc = np.log(np.maximum(grid.centers, 1e-300))
        full = penalty * ((logc[None, :] - logc[:, None]) / grid.log_spacing) ** 2  # [src, dst]
        back = np.empty((n, nb), dtype=np.int64)
        score = payoff[:, 0].copy()
        for k in range(1, n):
            cand = score[:, None] - full
            best = np.argmax(cand, axis=0)
            score = cand[best, np.arange(nb)] + payoff[:, k]
            back[k] = best
    else:
        offsets = np.arange(-max_jump, max_jump + 1)
        pen = _jump_penalty(grid, offsets, penalty)  # pen[i, src] for src -> src+offsets[i]
        back = np.empty((n, nb), dtype=np.int64)
        score = payoff[:, 0].copy()
        dst = np.arange(nb)
        for k in range(1, n):
            cand = np.full((offsets.size, nb), -np.inf)
            for i, j in enumerate(offsets):
                src = dst - j
                ok = (src >= 0) & (src < nb)
                cand[i, ok] = score[src[ok]] - pen[i, src[ok]]
            best = np.argmax(cand, axis=0)
            score = cand[best, dst] + payoff[:, k]
            # unreachable bins (all candidates -inf) keep an in-range pointer
            back[k] = np.clip(dst - offsets[best], 0, nb - 1)
    path = np.empty(n, dtype=np.int64)
    path[-1] = int(np.argmax(score))
    for k in range(n - 1, 0, -1):
        path[k - 1] = back[k, path[k]]
    return path


def extract_ridges(
    t: Union[SqueezedTransform, np.ndarray],
    count: int = 1,
    penalty: float = 1.0,
    max_jump: Optional[int] = 3,
    grid: Optional[FreqGrid] = None,
    clear_bins: int = 3,
    stop_ratio: float = 1e-8,
) -> List[Ridge]:
    """Greedily extract up to ``count`` ridges from ``|T|``.

    Each ridge is the best path for the payoff ``log(|T| + eps0)`` with
    ``eps0 = 1e-12 * max|T|``. After each ridge, ``clear_bins`` bins on each
    side of it are removed from further consideration, so ridges never share
    a bin at any time. Extraction stops early, with a :class:`RidgeWarning`,
    when the largest remaining ``|T|`` is at most ``stop_ratio`` times the
    original maximum.
    """
    if count < 1:
        raise InvalidSpecError("ridge count must be at least 1")
    if penalty < 0:
        raise InvalidSpecError("smoothness penalty must be nonnegative")
    if max_jump is not None and max_jump < 1:
        raise InvalidSpecError("max_jump must be at least 1 or None")
    if isinstance(t, SqueezedTransform):
        grid = t.grid
        mag = np.abs(t.t)
    else:
        mag = np.abs(np.asarray(t))
        if grid is None:
            raise InvalidSpecError("a FreqGrid is required when passing a bare matrix")
    if mag.shape[0] != len(grid):
        raise InvalidSpecError("matrix rows do not match the frequency grid")

    top = float(mag.max()) if mag.size else 0.0
    if not top > 0:
        warnings.warn("squeezed transform is identically zero; no ridges", RidgeWarning, stacklevel=2)
        return []
    payoff = np.log(mag + 1e-12 * top)
    blocked = np.zeros(mag.shape, dtype=bool)
    cols = np.arange(mag.shape[1])
    ridges = []
    for r in range(count):
        live = np.where(blocked, 0.0, mag)
        if live.max() <= stop_ratio * top or blocked.all(axis=0).any():
            warnings.warn(
                f"only {len(ridges)} of {count} ridges could be extracted", RidgeWarning, stacklevel=2
            )
            break
        path = track_ridge(np.where(blocked, -np.inf, payoff), grid, penalty, max_jump)
        if blocked[path, cols].any():
            warnings.warn(
                f"ridge {r} cannot avoid earlier ridges under max_jump={max_jump}; stopping",
                RidgeWarning,
                stacklevel=2,
            )
            break
        ridges.append(Ridge(grid.centers[path], path, mag[path, cols]))
        for off in range(-clear_bins, clear_bins + 1):
            b = path + off
            ok = (b >= 0) & (b < mag.shape[0])
            blocked[b[ok], cols[ok]] = True
    return ridges


def band_around(ridge: Ridge, grid: FreqGrid, mode: str = "bins", value: float = 3) -> Band:
    """Band around ``ridge``.

    ``mode="bins"``: ``value`` grid bins on each side of the ridge bin.
    ``mode="absolute"``: ``value`` rad/s on each side of the ridge frequency.
    Bands are clamped to the grid.
    """
    edges = grid.edges
    if mode == "bins":
        m = int(value)
        if m != value or m < 1:
            raise InvalidSpecError("bins mode needs a positive integer half-width")
        lo = np.clip(ridge.bin_index - m, 0, len(grid) - 1)
        hi = np.clip(ridge.bin_index + m, 0, len(grid) - 1)
        return Band(ridge, edges[lo], edges[hi + 1])
    if mode == "absolute":
        if not value > 0:
            raise InvalidSpecError("absolute half-width must be positive")
        lower = np.maximum(ridge.freq - value, edges[0])
        upper = np.minimum(ridge.freq + value, edges[-1])
        return Band(ridge, lower, upper)
    raise InvalidSpecError(f"band mode must be 'bins' or 'absolute', got {mode!r}")
