import itertools
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import brentq

from sstx.exceptions import InvalidSpecError
from sstx.reconstruct import reconstruct_band, reconstruct_full
from sstx.ridge import Band, Ridge, RidgeWarning, band_around, extract_ridges, track_ridge
from sstx.squeeze import FreqGrid, exclude_cone, synchrosqueeze

from conftest import MORLET, analyzed, interior_for

SMALL = FreqGrid.log(1.0, 2.0**1.5, 4)  # 6 bins


def _brute_force(payoff, grid, penalty, max_jump):
    logc = np.log(grid.centers)
    unit = grid.log_spacing
    nb, n = payoff.shape
    best, arg = -np.inf, None
    for path in itertools.product(range(nb), repeat=n):
        steps = np.diff(path)
        if max_jump is not None and np.any(np.abs(steps) > max_jump):
            continue
        val = payoff[list(path), range(n)].sum()
        val -= penalty * np.sum(((logc[list(path[1:])] - logc[list(path[:-1])]) / unit) ** 2)
        if val > best:
            best, arg = val, path
    return best, arg


def _score(payoff, grid, penalty, path):
    logc = np.log(grid.centers)
    return payoff[path, range(len(path))].sum() - penalty * np.sum(
        (np.diff(logc[path]) / grid.log_spacing) ** 2)


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**6), penalty=st.sampled_from([0.0, 0.3, 1.0, 5.0]),
       max_jump=st.sampled_from([None, 1, 2]))
def test_dp_matches_exhaustive_search(seed, penalty, max_jump):
    payoff = np.random.default_rng(seed).standard_normal((len(SMALL), 5))
    best, _ = _brute_force(payoff, SMALL, penalty, max_jump)
    path = track_ridge(payoff, SMALL, penalty, max_jump)
    assert _score(payoff, SMALL, penalty, path) == pytest.approx(best, abs=1e-9)
    if max_jump is not None:
        assert np.max(np.abs(np.diff(path))) <= max_jump


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_zero_penalty_unbounded_is_columnwise_argmax(seed):
    mag = np.random.default_rng(seed).random((8, 12)) + 1e-3
    grid = FreqGrid.log(1.0, 2.0**2, 4)
    r = extract_ridges(mag, 1, penalty=0.0, max_jump=None, grid=grid)[0]
    np.testing.assert_array_equal(r.bin_index, np.argmax(mag, axis=0))


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**6), scale=st.floats(1e-6, 1e6))
def test_scale_invariance(seed, scale):
    mag = np.random.default_rng(seed).random((8, 20))
    grid = FreqGrid.log(1.0, 2.0**2, 4)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RidgeWarning)
        a = extract_ridges(mag, 2, 1.0, 2, grid=grid)
        b = extract_ridges(mag * scale, 2, 1.0, 2, grid=grid)
    assert len(a) == len(b)
    for x, y in zip(a, b):
        np.testing.assert_array_equal(x.bin_index, y.bin_index)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_ridges_disjoint(seed):
    mag = np.random.default_rng(seed).random((40, 30))
    grid = FreqGrid.log(1.0, 2.0**5, 8)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RidgeWarning)
        rs = extract_ridges(mag, 3, 1.0, None, grid=grid)
    for x, y in itertools.combinations(rs, 2):
        assert np.all(x.bin_index != y.bin_index)
    for r in rs:
        assert np.all((r.freq >= grid.edges[0]) & (r.freq <= grid.edges[-1]))


def test_harmonic_ridge_within_one_bin():
    s, specs, _, _, t = analyzed("harmonic8")
    r = extract_ridges(t, 1)[0]
    inside = interior_for(s, specs)
    target = t.grid.locate(8.0)
    assert np.mean(np.abs(r.bin_index[inside] - target) <= 1) >= 0.99


def test_crossover_ridges_track_both_frequencies():
    s, specs, _, _, t = analyzed("crossover")
    rs = extract_ridges(t, 2)
    assert len(rs) == 2
    root = brentq(lambda x: 2 * x + 1 - np.sin(x) - 8, 0, 10)
    keep = interior_for(s, specs) & (np.abs(s.times - root) > 0.5)
    unit = t.grid.log_spacing
    for sp in specs:
        errs = [np.median(np.abs(np.log(r.freq[keep] / sp.inst_freq[keep]))) / unit for r in rs]
        assert min(errs) < 2


def test_zero_transform_gives_no_ridges():
    grid = FreqGrid.log(1.0, 4.0, 4)
    with pytest.warns(RidgeWarning):
        assert extract_ridges(np.zeros((8, 10)), 1, grid=grid) == []


def test_too_many_ridges_warns():
    mag = np.zeros((8, 10))
    mag[3] = 1.0
    grid = FreqGrid.log(1.0, 4.0, 4)
    with pytest.warns(RidgeWarning):
        rs = extract_ridges(mag, 3, grid=grid)
    assert 1 <= len(rs) < 3


def test_argument_validation():
    grid = FreqGrid.log(1.0, 4.0, 4)
    m = np.ones((8, 5))
    for kwargs in ({"count": 0}, {"penalty": -1.0}, {"max_jump": 0}):
        with pytest.raises(InvalidSpecError):
            extract_ridges(m, grid=grid, **kwargs)
    with pytest.raises(InvalidSpecError):
        extract_ridges(m)
    with pytest.raises(InvalidSpecError):
        extract_ridges(np.ones((5, 5)), grid=grid)


def test_band_modes():
    _, _, _, _, t = analyzed("harmonic8")
    r = extract_ridges(t, 1)[0]
    with pytest.raises(InvalidSpecError):
        band_around(r, t.grid, "bins", 0)
    with pytest.raises(InvalidSpecError):
        band_around(r, t.grid, "absolute", 0.0)
    with pytest.raises(InvalidSpecError):
        band_around(r, t.grid, "octaves", 1)
    b = band_around(r, t.grid, "bins", 3)
    assert np.all(b.halfwidth > 0)
    assert np.all(b.lower >= t.grid.edges[0]) and np.all(b.upper <= t.grid.edges[-1])
    with pytest.raises(InvalidSpecError):
        Band(r, np.ones(t.n), np.ones(t.n))


def test_three_bin_band_holds_harmonic_mass():
    s, specs, c, p, _ = analyzed("harmonic8")
    t = synchrosqueeze(c, exclude_cone(p, c), analyzed("harmonic8")[4].grid)
    r = extract_ridges(t, 1)[0]
    members = band_around(r, t.grid, "bins", 3).members(t.grid)
    mass = np.abs(t.mass())
    inside = interior_for(s, specs)
    frac = np.where(members, mass, 0).sum(axis=0)[inside] / mass.sum(axis=0)[inside]
    assert frac.min() >= 0.95


def test_whole_grid_band_is_full_reconstruction():
    _, _, _, _, t = analyzed("chirp")
    r = extract_ridges(t, 1)[0]
    comp = reconstruct_band(t, band_around(r, t.grid, "absolute", 1e9))
    np.testing.assert_allclose(comp.real_part.samples, reconstruct_full(t).samples, atol=1e-12)


def test_ridge_dataclass_len():
    r = Ridge(np.ones(4), np.zeros(4, int), np.ones(4))
    assert len(r) == 4
