"""Input checks shared by the estimator and CLI layers."""

from __future__ import annotations

import math

import numpy as np
from sklearn.utils import check_array

from .exceptions import InvalidSpecError
from .signals import Signal


def check_rate(sample_rate) -> float:
    try:
        rate = float(sample_rate)
    except (TypeError, ValueError):
        raise InvalidSpecError(f"sample rate must be a number, got {sample_rate!r}") from None
    if not (math.isfinite(rate) and rate > 0):
        raise InvalidSpecError(f"sample rate must be positive and finite, got {sample_rate!r}")
    return rate


def check_signal(x, sample_rate=None, allow_complex: bool = False) -> np.ndarray:
    """1-D finite samples as a float (or complex) array.

    Accepts a :class:`Signal`, a 1-D array, or a single-row / single-column
    2-D array.
    """
    if isinstance(x, Signal):
        if sample_rate is not None and not math.isclose(check_rate(sample_rate), x.sample_rate):
            raise InvalidSpecError("Signal sample rate disagrees with the configured sample_rate")
        return np.asarray(x.samples)
    arr = np.asarray(x)
    if allow_complex and np.iscomplexobj(arr):
        arr = np.atleast_1d(arr)
        if not np.all(np.isfinite(arr)):
            raise InvalidSpecError("samples contain NaN or infinity")
        return _as_1d(arr)
    arr = check_array(np.atleast_1d(arr), ensure_2d=False, dtype=np.float64, ensure_all_finite=True)
    return _as_1d(arr)


def _as_1d(arr: np.ndarray) -> np.ndarray:
    if arr.ndim == 2 and 1 in arr.shape:
        arr = arr.reshape(-1)
    if arr.ndim != 1:
        raise InvalidSpecError(f"expected a single 1-D signal, got shape {arr.shape}")
    if arr.size < 4:
        raise InvalidSpecError("signal needs at least 4 samples")
    return arr


def check_positive_int(value, name: str, minimum: int = 1) -> int:
    if isinstance(value, bool) or int(value) != value or value < minimum:
        raise InvalidSpecError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)
