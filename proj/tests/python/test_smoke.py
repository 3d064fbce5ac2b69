import numpy as np
import pytest

import dyadic


def off_windows(s, zeros, radius):
    keep = np.ones_like(s, dtype=bool)
    for z in zeros:
        keep &= np.abs(np.abs(s) - z) > radius
    return keep


def test_grid_is_symmetric_with_origin():
    s = dyadic.grid(2.0, 0.01)
    assert len(s) % 2 == 1
    assert s[len(s) // 2] == 0.0
    np.testing.assert_array_equal(s, -s[::-1])


def test_analytic_cf_matches_closed_form():
    s = dyadic.grid(5.0, 0.01)
    phi = dyadic.analytic_cf(dyadic.ComponentDist("laplace", 1.0), s)
    np.testing.assert_allclose(phi, 1.0 / (1.0 + s**2), atol=1e-15)
    assert dyadic.validate_cf(s, phi)["passed"]


def test_simulate_is_seeded():
    cfg = dyadic.ModelConfig(c=2.0)
    a = dyadic.simulate(cfg, 500, seed=7)
    b = dyadic.simulate(cfg, 500, seed=7)
    assert a.shape == (500, 3)
    np.testing.assert_array_equal(a, b)
    assert not np.array_equal(a, dyadic.simulate(cfg, 500, seed=8))


def test_oracle_identification_bridges_sinc_zero():
    cfg = dyadic.ModelConfig(alpha=dyadic.ComponentDist("uniform_symmetric", 1.0))
    r = dyadic.identify(oracle=cfg, s_max=5.0)
    s = r["s"]
    assert r["alpha"]["singular"] == pytest.approx([np.pi], abs=1e-3)
    keep = off_windows(s, [np.pi], 0.05)
    assert np.max(np.abs(r["alpha"]["cf"] - np.sinc(s / np.pi))[keep]) < 1e-3
    assert np.max(np.abs(r["eta"]["cf"] - np.exp(-(s**2) / 2))) < 1e-3
    assert np.max(np.abs(r["epsilon"]["cf"] - np.exp(-(s**2) / 2))) < 1e-2


def test_sample_identification_recovers_normal_near_origin():
    y = dyadic.simulate(dyadic.ModelConfig(), 50000, seed=42)
    r = dyadic.identify(samples=y, s_max=3.0)
    s = r["s"]
    near = np.abs(s) <= 1.0
    for part in ("alpha", "eta", "epsilon"):
        assert np.max(np.abs(r[part]["cf"] - np.exp(-(s**2) / 2))[near]) < 0.05


def test_identify_requires_exactly_one_source():
    with pytest.raises(ValueError):
        dyadic.identify(s_max=3.0)
    with pytest.raises(ValueError):
        dyadic.identify(samples=np.zeros((10, 2)))


def test_invert_normal_cf():
    s = dyadic.grid(6.0, 0.01)
    phi = dyadic.analytic_cf(dyadic.ComponentDist("normal", 1.0), s)
    est = dyadic.invert_cf(s, phi, cutoff=6.0, window="sharp", x_half_width=6.0)
    x, f = est["x"], est["density"]
    assert f[len(f) // 2] == pytest.approx(0.39894, abs=1e-3)
    assert np.max(np.abs(f - np.exp(-(x**2) / 2) / np.sqrt(2 * np.pi))) < 1e-6
    assert est["imag_residual"] < 1e-10


def test_ecf_derivative_matches_finite_differences():
    x = dyadic.simulate(dyadic.ModelConfig(), 2000, seed=3)[:, 0]
    s = dyadic.grid(3.0, 0.01)
    phi = dyadic.ecf(x, s)
    d = dyadic.ecf_partial_first(x, x, s)
    fd = (phi[2:] - phi[:-2]) / (2 * (s[1] - s[0]))
    assert np.max(np.abs(fd - d[1:-1])) < 1e-3


def test_bad_grid_is_rejected():
    with pytest.raises(ValueError):
        dyadic.analytic_cf(dyadic.ComponentDist(), np.array([0.0, 1.0]))
