import math

import pytest

import oscinfo


def test_config_and_alpha():
    c = oscinfo.OscillatorConfig(2.0, 3.0, 0.5)
    assert c.alpha == pytest.approx(0.5 * math.sqrt(6.0))
    with pytest.raises(ValueError):
        oscinfo.OscillatorConfig(0.0, 1.0, 1.0)


def test_coherent_state_peak():
    c = oscinfo.OscillatorConfig.with_alpha(1.0)
    psi = oscinfo.coherent_state(c, oscinfo.Coordinate(1.0, 0.0))
    assert abs(psi) == pytest.approx(math.pi ** -0.25)
    assert oscinfo.probability_density(c, oscinfo.Coordinate(1.0, 0.0)) == pytest.approx(1 / math.sqrt(math.pi))


def test_information_conserved():
    expected = (1 + math.log(math.sqrt(math.pi))) / 2 + 0.25
    for alpha in (0.5, 3.0, 20.0):
        c = oscinfo.OscillatorConfig.with_alpha(alpha)
        assert oscinfo.total_information(c, 0.4) == pytest.approx(expected, abs=1e-10)


def test_density_curve():
    c = oscinfo.OscillatorConfig.with_alpha(1.0)
    curve = oscinfo.density_curve(c, 0.0, -3.0, 5.0, 801)
    assert max(curve["density"]) == pytest.approx(0.443556, abs=1e-6)


def test_number_information():
    assert oscinfo.number_information(1.0).information == pytest.approx(1.304842, abs=1e-6)
    assert oscinfo.number_info_density(0.01) == pytest.approx(4.61208, abs=1e-5)
    with pytest.raises(ValueError):
        oscinfo.number_info_density(0.0)


def test_energy_and_gap():
    c = oscinfo.OscillatorConfig.with_alpha(20.0)
    assert oscinfo.energy_per_info(c, oscinfo.Coordinate(1.0, 0.0)) == pytest.approx(254.4, rel=1e-3)
    assert oscinfo.on_trajectory_energy_gap(c, 1.3).gap == pytest.approx(0.5)


def test_massless():
    c = oscinfo.OscillatorConfig.with_alpha(1.0)
    r = oscinfo.massless_dual_residuals(1.0, [2.0, 0.0, 0.0], c)
    assert r.wave_residual == pytest.approx(3.0)


def test_viscosity_fit():
    c = oscinfo.OscillatorConfig(1.0, 1.0, 1.0)
    nu = oscinfo.viscosity_fit_random(c, [1, 2, 3], 2001)
    assert nu.imag == pytest.approx(0.5, rel=1e-6)
    assert abs(nu.real) < 1e-6


def test_evolve_short():
    out = oscinfo.evolve_coherent_state(alpha=5.0, periods=0.05, n_points=1024)
    assert set(out) == {"t", "norm", "mean_xt", "overlap"}
    assert min(out["overlap"]) > 1 - 1e-4


def test_verification_suite():
    results = oscinfo.run_verification_suite()
    assert oscinfo.all_passed(results)
    assert {r.criterion for r in results} == set(range(1, 13))
    assert any(r.status == "info" for r in results)
