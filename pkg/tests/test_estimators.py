import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline

from sstx import RidgeDecomposer, SynchrosqueezedCWT, fixture
from sstx.cwt import interior_mask

from conftest import MORLET, interior_for, rel_l2


def test_transform_shapes_and_inverse():
    s, specs = fixture("chirp")
    est = SynchrosqueezedCWT(sample_rate=100.0)
    tt = est.fit_transform(s.samples)
    assert tt.shape == (len(est.frequencies_), s.n)
    rec = est.inverse_transform(tt)
    assert rel_l2(rec, s.samples, interior_for(s, specs)) < 0.05


def test_accepts_row_or_column_and_rejects_bad_input():
    s, _ = fixture("harmonic8")
    est = SynchrosqueezedCWT(sample_rate=100.0).fit(s.samples[None, :])
    a = est.transform(s.samples[:, None])
    b = est.transform(s.samples)
    np.testing.assert_array_equal(a, b)
    with pytest.raises(ValueError):
        est.transform(np.full(s.n, np.nan))
    with pytest.raises(ValueError):
        est.transform(np.ones((3, 3)))
    with pytest.raises(ValueError):
        est.transform(s.samples[:-1])
    with pytest.raises(ValueError):
        SynchrosqueezedCWT(sample_rate=-1.0).fit(s.samples)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        SynchrosqueezedCWT(sample_rate=100.0).transform(np.ones(100))


def test_clone_and_params():
    est = SynchrosqueezedCWT(sample_rate=50.0, wavelet="bump:0.25", voices=16)
    c = clone(est)
    assert c.get_params() == est.get_params()
    c.set_params(voices=24)
    assert c.voices == 24


def test_ridge_decomposer_three_cosine_and_pipeline():
    s, specs = fixture("three_cosine")
    dec = RidgeDecomposer(sample_rate=100.0, n_components=1)
    comps = dec.fit_transform(s.samples)
    assert comps.shape == (1, s.n)
    inside = interior_for(s, specs)
    assert rel_l2(comps[0], s.samples, inside) < 0.05
    np.testing.assert_allclose(dec.inverse_transform(comps), comps.sum(axis=0))
    est_full = SynchrosqueezedCWT(sample_rate=100.0).fit(s.samples)
    full = est_full.inverse_transform(est_full.transform(s.samples))
    rest = dec.residual(s.samples)
    assert np.max(np.abs(rest + comps.sum(axis=0) - full)) < 1e-10
    assert len(dec.ridges_) == 1
    pipe = make_pipeline(SynchrosqueezedCWT(sample_rate=100.0))
    assert pipe.fit_transform(s.samples).shape[1] == s.n


def test_ridge_decomposer_twotone():
    t = np.arange(1000) / 100
    x = np.cos(8 * t) + np.cos(40 * t)
    comps = RidgeDecomposer(sample_rate=100.0, n_components=2).fit_transform(x)
    inside = interior_mask(t, MORLET, 8.0)
    found = sorted(comps, key=lambda c: np.abs(np.diff(np.sign(c))).sum())
    assert rel_l2(found[0], np.cos(8 * t), inside) < 0.05
    assert rel_l2(found[1], np.cos(40 * t), inside) < 0.05
