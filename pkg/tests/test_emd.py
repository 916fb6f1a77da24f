import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sstx.cwt import interior_mask
from sstx.emd import SiftConfig, emd_decompose, envelope_mean, local_extrema, zero_crossings
from sstx.exceptions import InvalidSpecError, TooFewExtremaError
from sstx.signals import Signal, fixture

from conftest import MORLET

T = np.arange(1000) / 100
INSIDE = interior_mask(T, MORLET, 8.0)


def test_envelope_mean_of_tone_is_near_zero():
    m = envelope_mean(Signal(np.cos(8 * T), 100.0))
    assert np.max(np.abs(m.samples[INSIDE])) < 0.05


def test_envelope_mean_passes_offset():
    m = envelope_mean(Signal(np.cos(8 * T) + 2, 100.0))
    assert np.max(np.abs(m.samples[INSIDE] - 2)) < 0.05


def test_monotone_signal_has_too_few_extrema():
    with pytest.raises(TooFewExtremaError):
        envelope_mean(Signal(T**2, 100.0))


def test_two_tone_first_imf_is_high_tone():
    x = np.cos(8 * T) + np.cos(40 * T)
    out = emd_decompose(Signal(x, 100.0))
    rho = np.corrcoef(out.imfs[0].samples[INSIDE], np.cos(40 * T)[INSIDE])[0, 1]
    assert rho > 0.95
    assert np.max(np.abs(out.total() - x)) <= 1e-10


def test_zero_signal_yields_residual_only():
    out = emd_decompose(Signal(np.zeros(200), 100.0))
    assert out.imfs == [] and not out.residual.samples.any()


def test_extrema_helpers():
    x = np.array([0, 1, 1, 1, 0, -1, 0, 2, 2, 0.0])
    maxima, minima = local_extrema(x)
    assert maxima.tolist() == [2, 7] and minima.tolist() == [5]
    assert zero_crossings(np.array([1.0, 0.0, -1.0, 2.0])) == 2
    assert local_extrema(np.ones(5))[0].size == 0


def test_config_validation():
    for kwargs in ({"max_sift_iters": 0}, {"sd_stop": 0.0}, {"max_imfs": 0}, {"count_sift_iters": -1}):
        with pytest.raises(InvalidSpecError):
            SiftConfig(**kwargs)


@pytest.mark.parametrize("name", ["harmonic8", "chirp", "three_cosine", "crossover"])
def test_fixture_imfs_obey_count_rule(name):
    s, _ = fixture(name)
    out = emd_decompose(s)
    assert np.max(np.abs(out.total() - s.samples)) <= 1e-10 * np.max(np.abs(s.samples))
    for imf in out.imfs:
        maxima, minima = local_extrema(imf.samples)
        assert abs(maxima.size + minima.size - zero_crossings(imf.samples)) <= 2


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(20, 1500), walk=st.booleans(),
       scale=st.floats(1e-3, 1e3), offset=st.floats(-10, 10))
def test_additivity_and_count_rule(seed, n, walk, scale, offset):
    x = np.random.default_rng(seed).standard_normal(n) * scale + offset
    if walk:
        x = np.cumsum(x)
    out = emd_decompose(Signal(x, 100.0))
    assert len(out.imfs) <= SiftConfig().max_imfs
    assert np.max(np.abs(out.total() - x)) <= 1e-10 * max(1.0, np.max(np.abs(x)))
    for imf in out.imfs:
        maxima, minima = local_extrema(imf.samples)
        assert abs(maxima.size + minima.size - zero_crossings(imf.samples)) <= 2
