"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

import nsbounds as nsb


def test_bound_values():
    assert nsb.ns_global_bound(1, 3) == pytest.approx(0.75, abs=1e-12)
    assert nsb.ns_global_bound(2, 4) == pytest.approx(0.875, abs=1e-12)
    assert nsb.ns_replication_bound(1, 3) == nsb.ns_global_bound(1, 3)
    assert nsb.ns_bound_erf(9, 1000) == pytest.approx(0.24817036595415072, abs=1e-12)


def test_attainment_single_point():
    n, m, theta = 3, 11, 0.9
    state = nsb.optimal_input_state(n, m)
    out = nsb.clone_map(nsb.apply_phase(state, theta), n, m)
    assert nsb.global_clone_fidelity(out, theta) == pytest.approx(
        nsb.ns_global_bound(n, m), abs=1e-11
    )


def test_phase_amplitudes_roundtrip():
    amps = np.array([1.0, 1.0j, -1.0], dtype=complex)
    state = nsb.PhaseAmplitudes(amps)
    assert state.dim == 3
    assert state.pre_norm == pytest.approx(math.sqrt(3.0))
    np.testing.assert_allclose(np.abs(state.amps), 1.0 / math.sqrt(3.0))


def test_twirl_and_fidelity():
    rho = nsb.SymmetricBlockDensity.pure(nsb.ml_state(2))
    diag = nsb.twirl_u1(rho)
    assert diag.min_eigenvalue() >= -1e-10
    assert np.allclose(np.diag(diag.matrix), np.full(3, 1.0 / 3.0))
    assert nsb.uhlmann_fidelity(rho, rho) == pytest.approx(1.0, abs=1e-12)


def test_metrology_scalings():
    assert nsb.max_likelihood_ratio(nsb.ml_state(7)) == pytest.approx(8.0, abs=1e-12)
    assert nsb.ns_alignment_fidelity_exact(0) == pytest.approx(0.5)
    assert nsb.jacobi_theta4(1.0) == pytest.approx(0.30062580086898437, abs=1e-12)
    assert nsb.quantum_alignment_fidelity(nsb.berry_wiseman_state(2)) == pytest.approx(
        math.cos(math.pi / 8) ** 2, abs=1e-12
    )


def test_step_distribution_and_signaling():
    step = nsb.ns_step_distribution(3)
    assert nsb.fourier_component(step, 2) == pytest.approx(
        math.sin(math.pi / 2) / (math.pi / 2), abs=1e-12
    )
    verdict = nsb.ns_compatible(step, 3, 1e-10)
    assert not verdict.compatible
    assert nsb.sinc_signal(1, 3) == pytest.approx(2.0 / (3.0 * math.pi), abs=1e-12)


def test_ensemble_density_depends_only_on_low_harmonics():
    seed = nsb.PhaseAmplitudes(np.ones(4, dtype=complex))
    flat = nsb.ensemble_density(nsb.CircularDistribution.uniform(), seed)
    wiggly = nsb.ensemble_density(nsb.CircularDistribution.raised_cosine(9), seed)
    assert flat.frobenius_distance(wiggly) <= 1e-12


def test_measure_and_prepare_ratio():
    m = 10000
    fid = nsb.mp_fidelity(nsb.gaussian_state(m, m ** (1.0 / 3.0)), nsb.mp_operator(4, m))
    assert 0.88 < fid / nsb.ns_global_bound(4, m) < 1.0
    assert nsb.naive_mp_fidelity(3, m) * math.sqrt(2.0) == nsb.mp_asymptotic(3, m)


def test_steering_difference():
    eps = math.pi / 6
    p = nsb.qubit_steering(eps, nsb.ns_step_distribution(1))
    assert abs(p.p_basis - p.p_x) == pytest.approx(1.0 / (4.0 * math.pi), abs=1e-12)
