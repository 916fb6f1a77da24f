import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy import integrate

from sstx.exceptions import InvalidSpecError, QuadratureError
from sstx.wavelets import QuadConfig, WaveletSpec, constants, spectrum, time_domain

BUMP = WaveletSpec("bump", delta=0.25)
MORLET = WaveletSpec("morlet", omega0=6.0)


def test_spectrum_examples():
    assert spectrum(BUMP, 1.0) == 1.0
    assert spectrum(BUMP, 1.25) == 0.0
    assert spectrum(BUMP, 0.74) == 0.0
    assert spectrum(MORLET, 6.0) == 1.0
    assert spectrum(MORLET, -1.0) == 0.0


@given(st.floats(-50, 50, allow_nan=False))
def test_spectrum_support_and_sign(xi):
    for spec in (BUMP, WaveletSpec("bump", 0.6), MORLET):
        v = spectrum(spec, xi)
        assert np.isfinite(v) and 0 <= v <= 1
        if xi <= 0:
            assert v == 0
    if abs(xi - 1) >= 0.25:
        assert spectrum(BUMP, xi) == 0


def test_spectrum_endpoints_are_exact_zero():
    v = spectrum(BUMP, np.array([0.75, 1.25, np.nextafter(0.75, 1), np.nextafter(1.25, 1)]))
    assert np.all(np.isfinite(v))
    assert v[0] == 0 and v[1] == 0 and v[3] == 0


def test_parse_and_str():
    assert WaveletSpec.parse("bump:0.2") == WaveletSpec("bump", 0.2)
    assert WaveletSpec.parse("morlet:6") == MORLET
    assert str(WaveletSpec.parse(str(BUMP))) == str(BUMP)
    for bad in ("haar", "bump:x", "bump:1.5", "morlet:0.5"):
        with pytest.raises(InvalidSpecError):
            WaveletSpec.parse(bad)


def test_constants_positive_and_related():
    for spec in (BUMP, WaveletSpec("bump", 0.2), MORLET):
        wc = constants(spec)
        assert wc.c_psi.real > 0 and wc.c_psi.imag == 0
        assert wc.r_psi.real > 0
        assert math.isfinite(wc.c_double) and wc.c_double > 0
        assert all(m > 0 and math.isfinite(m) for m in wc.moments_i + wc.moments_ip)
        assert wc.r_psi == pytest.approx(2 * np.conj(wc.c_psi), rel=1e-14)


def test_constants_against_independent_quadrature():
    # adaptive quad in xi, unrelated to the log-trapezoid used by constants()
    for spec in (BUMP, WaveletSpec("bump", 0.4)):
        wc = constants(spec)
        lo, hi = spec.passband
        ref, _ = integrate.quad(lambda x: spectrum(spec, x) / x, lo, hi, epsabs=0, epsrel=1e-12, limit=200)
        assert wc.r_psi.real == pytest.approx(ref, rel=1e-9)
        assert wc.c_psi.real == pytest.approx(ref / 2, rel=1e-9)
        ref2, _ = integrate.quad(lambda x: spectrum(spec, x) ** 2 / x, lo, hi, epsabs=0, epsrel=1e-12, limit=200)
        assert wc.c_double == pytest.approx(ref2 / 2, rel=1e-9)


def test_quadrature_self_convergence():
    a = constants(BUMP, QuadConfig(nodes=2**12)).c_psi
    b = constants(BUMP, QuadConfig(nodes=2**13)).c_psi
    assert abs(a - b) / abs(b) < 1e-8


def test_quadrature_failure_reports_tolerance():
    with pytest.raises(QuadratureError) as info:
        constants(BUMP, QuadConfig(tail_tol=1e-30, max_halfwidth=2.0**9))
    assert info.value.achieved > 0
    with pytest.raises(InvalidSpecError):
        QuadConfig(nodes=100)


def test_time_domain_matches_closed_form_morlet():
    u, psi, _ = time_domain(MORLET, 20.0)
    u = u.astype(float)
    psi = psi.astype(complex)
    ref = np.exp(-u**2 / 2 + 6j * u) / math.sqrt(2 * math.pi)
    assert np.max(np.abs(psi - ref)) < 1e-8


def test_moment_one_by_direct_sum():
    wc = constants(BUMP)
    u, psi, _ = time_domain(BUMP, 4.0 * 2**13)
    step = float(u[1] - u[0])
    i1 = float(np.sum(np.abs(u) * np.abs(psi)) * step)
    assert wc.moments_i[0] == pytest.approx(i1, rel=1e-6)


def test_time_spread_scales_with_delta():
    narrow = constants(WaveletSpec("bump", 0.2)).time_spread
    wide = constants(WaveletSpec("bump", 0.4)).time_spread
    assert narrow > wide
