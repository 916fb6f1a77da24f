import functools

import numpy as np
import pytest

from sstx import WaveletSpec, analyze, fixture, interior_mask

MORLET = WaveletSpec("morlet", omega0=6.0)


@functools.lru_cache(maxsize=None)
def analyzed(name, wavelet="morlet:6", freq_grid="log", freq_bins=32):
    s, specs = fixture(name)
    c, p, t = analyze(s, wavelet, freq_grid=freq_grid, freq_bins=freq_bins)
    return s, specs, c, p, t


def interior_for(s, specs, wavelet=MORLET):
    low = np.min([sp.inst_freq for sp in specs], axis=0)
    return interior_mask(s.times, wavelet, low)


def rel_l2(x, y, mask=None):
    x, y = np.asarray(x), np.asarray(y)
    if mask is not None:
        x, y = x[mask], y[mask]
    return float(np.linalg.norm(x - y) / np.linalg.norm(y))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# criterion number -> list of (part, passed, detail); filled by test_acceptance.py
ACCEPTANCE = {}


def record(number, part, passed, detail=""):
    ACCEPTANCE.setdefault(number, []).append((part, bool(passed), detail))
    return bool(passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[number]
        status = "PASS" if all(ok for _, ok, _ in parts) else "FAIL"
        text = "; ".join(f"{name}: {'ok' if ok else 'failed'} {detail}".rstrip() for name, ok, detail in parts)
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {text}")
