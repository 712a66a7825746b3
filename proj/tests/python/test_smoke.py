"""Smoke tests for the python bindings."""

import math

import pytest

import wgqed


@pytest.fixture
def wg():
    return wgqed.WaveguideParams()


def make_pair(d, gamma_wg, gamma_free=0.0):
    return wgqed.EmitterArray(
        [
            wgqed.Emitter(z=0.0, gamma_wg=gamma_wg, gamma_free=gamma_free),
            wgqed.Emitter(z=d, gamma_wg=gamma_wg, gamma_free=gamma_free),
        ]
    )


def test_pair_coupling_worked_value(wg):
    v = wgqed.pair_coupling_phase(0.05, 2.0, 1.0, wg)
    assert v.real == pytest.approx(1.4412390, rel=1e-6)
    assert v.imag == pytest.approx(23.3915584, rel=1e-6)


def test_energy_conservation_lossless(wg):
    arr = make_pair(0.07, 1.3)
    spec = wgqed.compute_spectrum(arr, wgqed.uniform_grid(-5.0, 5.0, 501), wg)
    for R, T in zip(spec.reflectivity, spec.transmissivity):
        assert abs(R + T - 1.0) < 1e-12


def test_dip_inversion_round_trip(wg):
    arr = make_pair(0.05, 1.0)
    spec = wgqed.compute_spectrum(arr, wgqed.uniform_grid(-2.0, 2.0, 4001), wg)
    features = wgqed.find_extrema(spec, arr, wg)
    assert len(features.dips) == 1
    d = wgqed.invert_dip_lossless(features.dips[0].center, 1.0, 0, wg)
    assert d == pytest.approx(0.05, rel=1e-3)


def test_lossy_pipeline(wg):
    arr = make_pair(0.05, 2.0, 1.0)
    spec = wgqed.compute_spectrum(arr, wgqed.uniform_grid(-72.0, 72.0, 48001), wg)
    res = wgqed.invert_lossy_from_spectrum(spec, arr, wg)
    assert res.d == pytest.approx(0.0502, abs=5e-4)
    assert res.gamma_wg[0] == pytest.approx(1.99, abs=0.03)
    assert res.gamma_free[0] == pytest.approx(1.01, abs=0.03)


def test_counting(wg):
    emitters = [
        wgqed.Emitter(z=0.05 * i, gamma_wg=5.0, gamma_free=1.0) for i in range(3)
    ]
    arr = wgqed.EmitterArray(emitters)
    half = wgqed.default_scan_halfwidth(arr, wg)
    spec = wgqed.compute_spectrum(arr, wgqed.uniform_grid(-half, half, 100001), wg)
    features = wgqed.find_extrema(spec, arr, wg)
    count = wgqed.count_emitters(features, wgqed.Regime.lossy, spec)
    assert count.emitters == 3


def test_sensing_conversion():
    cfg = wgqed.SensingConfig()
    strain, kelvin = wgqed.dd_to_strain_temperature(1e-4, cfg)
    assert strain == pytest.approx(124.0)
    assert kelvin == pytest.approx(12.4)


def test_validation_error_maps_to_python():
    with pytest.raises(ValueError):
        wgqed.EmitterArray([wgqed.Emitter(z=0.0, gamma_wg=-1.0)])


def test_branch_disambiguation(wg):
    n, d, residual = wgqed.disambiguate_branch(1.1, 2.0, 0.05, wg)
    assert n == 1
    assert d == pytest.approx(0.55)
    assert residual < 1e-9


def test_sensing_reading_and_limits():
    cfg = wgqed.SensingConfig()
    cfg.baseline_d = 0.01
    cfg.gamma_wg = 10.0
    cfg.gamma_free = 1.0
    cfg.branch = wgqed.Branch.superradiant
    reading = wgqed.read_shift(92.0, cfg)
    assert reading.dd == pytest.approx(-1e-4, rel=0.01)
    assert reading.resolvable
    limit = wgqed.min_detectable(cfg)
    assert limit.dd_min == pytest.approx(2e-5, rel=0.1)


def test_gradient_and_per_emitter(wg):
    arr = wgqed.EmitterArray(
        [
            wgqed.Emitter(z=0.0, gamma_wg=1.0, gamma_free=0.5),
            wgqed.Emitter(z=2.1, gamma_wg=1.5, gamma_free=0.9),
        ]
    )
    shifted = wgqed.apply_gradient_field(arr, 6.0)
    assert shifted.emitters()[1].detuning == pytest.approx(12.6)
    spec = wgqed.compute_spectrum(shifted, wgqed.uniform_grid(-10.0, 23.0, 60001), wg)
    res = wgqed.extract_per_emitter(spec, shifted, wg, 6.0)
    assert res.d == pytest.approx(2.1, abs=0.02)
    assert res.gamma_wg[0] == pytest.approx(0.97, abs=0.05)
    assert res.gamma_wg[1] == pytest.approx(1.58, abs=0.08)
