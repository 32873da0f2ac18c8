"""Smoke tests for the _rqilab extension module."""

import math

import numpy as np
import pytest

import _rqilab as rqi


def test_two_mode_squeezed_vacuum_matches_gaussian_route():
    r = 0.6
    psi = rqi.rindler.two_mode_squeezed_vacuum(r, 30)
    rho = rqi.fock.DensityMatrix.from_pure(psi)
    neg, log_neg = rqi.fock.negativity_measures(rho, [0])
    assert log_neg == pytest.approx(2.0 * r / math.log(2.0), abs=1e-6)

    alpha = np.eye(2, dtype=complex) * math.cosh(r)
    beta = np.zeros((2, 2), dtype=complex)
    beta[0, 1] = beta[1, 0] = math.sinh(r)
    S = rqi.gaussian.symplectic_from_bogoliubov(rqi.gaussian.BogoliubovPair(alpha, beta), 1e-12)
    sigma = rqi.gaussian.apply_symplectic(rqi.gaussian.CovarianceMatrix.vacuum(2), S)
    ent = rqi.gaussian.two_mode_entanglement(sigma)
    assert ent["log_negativity"] == pytest.approx(log_neg, abs=1e-4)
    assert ent["nu_minus"] == pytest.approx(math.exp(-2.0 * r), abs=1e-10)


def test_alice_rob_closed_form():
    assert rqi.rindler.alice_rob_log_negativity_closed(0.0, 100) == pytest.approx(1.0)
    rho = rqi.rindler.alice_rob_state(0.5, 40)
    _, log_neg = rqi.fock.negativity_measures(rho, [0])
    closed = rqi.rindler.alice_rob_log_negativity_closed(0.5, 400)
    assert closed == pytest.approx(log_neg, abs=1e-4)


def test_cosmology_gamma_identity():
    params = rqi.cosmology.ExpansionParams(1.0, 1.0, 1.0)
    alpha, beta = rqi.cosmology.bogoliubov_rw(1.0, params)
    gamma = rqi.cosmology.gamma_parameter(1.0, params)
    assert abs(beta / alpha) ** 2 == pytest.approx(gamma, abs=1e-10)
    assert abs(alpha) ** 2 - abs(beta) ** 2 == pytest.approx(1.0, abs=1e-10)
    assert rqi.cosmology.entanglement_entropy(0.5) == pytest.approx(2.0)


def test_detector_planck_shape():
    traj = rqi.detector.Trajectory.accelerated(1.0)
    cfg = rqi.detector.ResponseConfig(1e-3, 40.0)
    res = rqi.detector.response_numeric(1.0, traj, cfg)
    assert res["converged"]
    assert res["value"] == pytest.approx(rqi.detector.planck_response(1.0, 1.0), rel=0.05)


def test_wigner_rotation_and_concurrence():
    m = 1.0
    p = rqi.wigner.on_shell(np.array([0.0, 0.0, 1.2]), m)
    boost = rqi.wigner.lorentz_from_rapidity(np.array([0.0, 0.0, 1.0]), 0.7)
    w = rqi.wigner.wigner_rotation(boost, p, m)
    assert np.allclose(w.entries, np.eye(4), atol=1e-10)

    bell = np.eye(2, dtype=complex)
    packet = rqi.wigner.GaussianSpinPacket(np.zeros(3), 1e-3, np.array([1.0, 0.0], dtype=complex))
    amp = rqi.wigner.TwoParticleAmplitude(bell, packet, packet, 12)
    c = rqi.wigner.two_particle_concurrence(
        amp, rqi.wigner.lorentz_from_rapidity(np.array([1.0, 0.0, 0.0]), 1.0), m
    )
    assert c == pytest.approx(1.0, abs=1e-5)


def test_cavity_building_block():
    geom = rqi.cavity.CavityGeometry.from_length_h(1.0, 1e-3)
    pair = rqi.cavity.building_block_bogoliubov(geom, 4, 512)
    assert abs(pair.alpha[0, 0] - 1.0) < 1e-5
    assert abs(pair.beta[0, 1]) == pytest.approx(0.0106 * 1e-3, rel=0.05)
