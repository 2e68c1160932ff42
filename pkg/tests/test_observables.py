import math

import numpy as np
import pytest

from diracwalk import (
    InitialCondition,
    SpinorField,
    WalkParams,
    entropy_bits,
    init_state,
    observable_series,
    position_distribution,
    reduced_external,
    reduced_internal,
    velocity,
    zb_metrics,
)

ENTROPY_09_01 = 0.4689955935892812  # -0.9*log2(0.9) - 0.1*log2(0.1)


def _random_field(rng, n):
    amps = rng.standard_normal(2 * n) + 1j * rng.standard_normal(2 * n)
    return SpinorField(n, amps / np.linalg.norm(amps))


def test_reduced_internal_product_state():
    rho = reduced_internal(init_state(InitialCondition((1, 0), site=3), 8))
    np.testing.assert_allclose(rho, [[1, 0], [0, 0]], atol=1e-14)


def test_reduced_internal_orthogonal_supports():
    amps = np.zeros(16, dtype=complex)
    amps[2] = 1 / math.sqrt(2)       # R at site 2
    amps[8 + 5] = 1 / math.sqrt(2)   # L at site 5
    rho = reduced_internal(SpinorField(8, amps))
    np.testing.assert_allclose(rho, np.eye(2) / 2, atol=1e-14)


def test_reduced_internal_is_density_matrix():
    rng = np.random.default_rng(12)
    for _ in range(10):
        rho = reduced_internal(_random_field(rng, 16))
        np.testing.assert_allclose(rho, rho.conj().T, atol=1e-12)
        assert abs(np.trace(rho).real - 1.0) < 1e-12
        assert np.linalg.eigvalsh(rho).min() > -1e-10


def test_reduced_external_delta_projector():
    field = init_state(InitialCondition((0.6, 0.8j), site=3), 8)
    rho = reduced_external(field)
    expected = np.zeros((8, 8), dtype=complex)
    expected[3, 3] = 1.0
    np.testing.assert_allclose(rho, expected, atol=1e-14)


def test_reduced_external_trace_one():
    rng = np.random.default_rng(2)
    rho = reduced_external(_random_field(rng, 32))
    assert abs(np.trace(rho).real - 1.0) < 1e-12


def test_reduced_external_size_guard():
    field = init_state(InitialCondition((1, 0), site=0), 512)
    with pytest.raises(ValueError):
        reduced_external(field)


def test_entropy_identity_between_reductions():
    rng = np.random.default_rng(21)
    for _ in range(20):
        field = _random_field(rng, 64)
        s_spin = entropy_bits(reduced_internal(field))
        s_pos = entropy_bits(reduced_external(field))
        assert abs(s_spin - s_pos) < 1e-9


def test_entropy_pure_state_zero():
    assert entropy_bits(np.array([[1, 0], [0, 0]], dtype=complex)) == 0.0


def test_entropy_maximally_mixed_is_one():
    assert abs(entropy_bits(np.eye(2) / 2) - 1.0) < 1e-12


def test_entropy_known_eigenvalues():
    rho = np.diag([0.9, 0.1]).astype(complex)
    assert abs(entropy_bits(rho) - ENTROPY_09_01) < 1e-12
    # same spectrum hidden in a rotated basis
    theta = 0.7
    u = np.array(
        [[math.cos(theta), -math.sin(theta)], [math.sin(theta), math.cos(theta)]]
    )
    assert abs(entropy_bits(u @ rho @ u.T) - ENTROPY_09_01) < 1e-12


def test_entropy_rejects_non_hermitian():
    with pytest.raises(ValueError):
        entropy_bits(np.array([[0.5, 0.4], [0.0, 0.5]]))


def test_entropy_clamps_tiny_negative_eigenvalues():
    rho = np.diag([1.0 + 5e-11, -5e-11]).astype(complex)
    assert entropy_bits(rho) >= 0.0


def test_velocity_basis_states():
    assert velocity(init_state(InitialCondition((1, 0), site=0), 4)) == -1.0
    assert velocity(init_state(InitialCondition((0, 1), site=0), 4)) == 1.0
    balanced = init_state(InitialCondition((1, 1), site=0), 4)
    assert abs(velocity(balanced)) < 1e-14


def test_position_distribution_sums_to_one():
    rng = np.random.default_rng(31)
    dist = position_distribution(_random_field(rng, 32))
    assert abs(dist.sum() - 1.0) < 1e-12
    assert dist.min() >= 0.0


def test_zb_constant_series():
    metrics = zb_metrics(np.full(40, -1.0))
    assert metrics.amplitude < 1e-9
    assert metrics.frequency == 0.0


def test_zb_synthetic_cosine():
    t = np.arange(64)
    series = 0.3 * np.cos(2 * np.pi * 8 * t / 64)
    metrics = zb_metrics(series, transient_skip=0)
    assert abs(metrics.amplitude - 0.3) < 0.003
    assert metrics.frequency == 8 / 64


def test_zb_short_series_rejected():
    with pytest.raises(ValueError):
        zb_metrics(np.zeros(10), transient_skip=5)


def test_massless_walk_has_no_oscillation():
    params = WalkParams(64, 1.0, 0.0, steps=64)
    series = observable_series(InitialCondition((1, 0), site=0), params)
    assert np.max(series.entropy_bits) <= 1e-9
    assert np.max(np.abs(series.velocities + 1.0)) <= 1e-9
    assert zb_metrics(series.velocities).amplitude < 1e-9


def test_massive_walk_entangles_and_oscillates():
    params = WalkParams(64, 1.0, math.pi / 4, steps=64)
    series = observable_series(InitialCondition((1, 0), site=0), params)
    assert np.max(series.entropy_bits) > 0.1
    assert np.all(series.entropy_bits >= -1e-12)
    assert np.all(series.entropy_bits <= 1.0 + 1e-9)
    assert np.all(np.abs(series.velocities) <= 1.0 + 1e-12)
    skip = len(series.velocities) // 10
    window = series.velocities[skip:]
    assert window.max() - window.min() > 0.05


def test_observable_series_positions_shape():
    params = WalkParams(16, 0.5, 1.0, steps=5)
    series = observable_series(
        InitialCondition((1, 0), site=0), params, keep_positions=True
    )
    assert series.positions.shape == (6, 16)
    np.testing.assert_allclose(series.positions.sum(axis=1), np.ones(6), atol=1e-9)
    assert series.times[1] == 0.5
