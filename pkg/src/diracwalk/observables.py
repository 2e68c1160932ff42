"""Reduced density matrices, entanglement entropy, velocity, oscillations.

The internal (spin) space of a pure walk state can entangle with the
external (position) space; the entanglement is quantified by the von
Neumann entropy of either reduced density matrix, in bits, so a single
spin saturates at exactly 1.  The velocity observable is -<Z> on the
internal space; its rapid oscillation for massive walks is the trembling
motion quantified by :func:`zb_metrics`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .evolution import WalkParams, iter_evolve
from .state import InitialCondition, SpinorField

__all__ = [
    "reduced_internal",
    "reduced_external",
    "entropy_bits",
    "velocity",
    "position_distribution",
    "ObservableSeries",
    "observable_series",
    "ZbMetrics",
    "zb_metrics",
]

EXTERNAL_DENSE_LIMIT = 256
_CONSTANT_EPS = 1e-9  # peak-to-peak/2 below this counts as a constant series


def reduced_internal(field: SpinorField) -> np.ndarray:
    """2x2 spin density matrix, rho[s, s'] = sum_x psi_s(x) conj(psi_s'(x))."""
    blocks = field.as_matrix()
    return blocks @ blocks.conj().T


def reduced_external(field: SpinorField) -> np.ndarray:
    """N x N position density matrix, rho[x, y] = sum_s psi_s(x) conj(psi_s(y)).

    Dense test-scale oracle only; limited to N <= 256.
    """
    if field.n_sites > EXTERNAL_DENSE_LIMIT:
        raise ValueError(
            f"dense external density matrix limited to N <= {EXTERNAL_DENSE_LIMIT}"
        )
    blocks = field.as_matrix()
    return blocks.T @ blocks.conj()


def entropy_bits(rho: np.ndarray) -> float:
    """Von Neumann entropy -sum lambda*log2(lambda) of a density matrix.

    2x2 inputs use the closed-form eigenvalues; larger Hermitian matrices
    go through an eigensolver.  Eigenvalues in [-1e-10, 0) are clamped to
    zero, and 0*log(0) counts as 0.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square density matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-8:
        raise ValueError("density matrix is not Hermitian within tolerance")
    if rho.shape == (2, 2):
        mean = (rho[0, 0].real + rho[1, 1].real) / 2
        radius = math.hypot((rho[0, 0].real - rho[1, 1].real) / 2, abs(rho[0, 1]))
        lam = np.array([mean - radius, mean + radius])
    else:
        lam = np.linalg.eigvalsh(rho)
    if lam.min() < -1e-10:
        raise ValueError(f"negative eigenvalue {lam.min()} beyond tolerance")
    lam = np.clip(lam, 0.0, 1.0)
    nonzero = lam[lam > 0.0]
    return float(-(nonzero * np.log2(nonzero)).sum()) + 0.0  # avoid -0.0


def velocity(field: SpinorField) -> float:
    """Velocity expectation -<Z> on the internal space, in [-1, 1]."""
    rho = reduced_internal(field)
    return float(-(rho[0, 0].real - rho[1, 1].real))


def position_distribution(field: SpinorField) -> np.ndarray:
    """Per-site probability |psi_R(x)|^2 + |psi_L(x)|^2, internal site order."""
    blocks = field.as_matrix()
    return (np.abs(blocks) ** 2).sum(axis=0)


@dataclass(frozen=True)
class ObservableSeries:
    """Per-step observables of one walk trajectory.

    ``positions`` is a (steps+1, N) probability matrix when requested,
    else None; all other fields are length steps+1 arrays.
    """

    times: np.ndarray
    entropy_bits: np.ndarray
    velocities: np.ndarray
    norms: np.ndarray
    positions: np.ndarray | None = None


def observable_series(
    ic: InitialCondition, params: WalkParams, keep_positions: bool = False
) -> ObservableSeries:
    """Run a walk and stream its observables without storing state snapshots."""
    count = params.steps + 1
    times = np.arange(count) * params.dt
    entropies = np.empty(count)
    velocities = np.empty(count)
    norms = np.empty(count)
    positions = np.empty((count, params.n_sites)) if keep_positions else None
    for i, field in enumerate(iter_evolve(ic, params)):
        rho = reduced_internal(field)
        entropies[i] = entropy_bits(rho)
        velocities[i] = -(rho[0, 0].real - rho[1, 1].real)
        norms[i] = np.linalg.norm(field.amps)
        if positions is not None:
            positions[i] = position_distribution(field)
    return ObservableSeries(times, entropies, velocities, norms, positions)


@dataclass(frozen=True)
class ZbMetrics:
    """Oscillation summary: half the peak-to-peak swing and the dominant
    non-DC frequency in cycles per step (0 for constant series)."""

    amplitude: float
    frequency: float


def zb_metrics(velocities: np.ndarray, transient_skip: int | None = None) -> ZbMetrics:
    """Oscillation amplitude and dominant frequency of a velocity series.

    The first ``transient_skip`` samples (default: 10% of the series) are
    dropped; the startup from a localized initial state is not steady
    oscillation.  The retained window must hold at least 8 samples.
    """
    v = np.asarray(velocities, dtype=float)
    if transient_skip is None:
        transient_skip = len(v) // 10
    if transient_skip < 0:
        raise ValueError(f"transient_skip must be >= 0, got {transient_skip}")
    window = v[transient_skip:]
    if len(window) < 8:
        raise ValueError(
            f"series too short: {len(window)} samples retained, need >= 8"
        )
    amplitude = float(window.max() - window.min()) / 2
    if amplitude < _CONSTANT_EPS:
        return ZbMetrics(amplitude, 0.0)
    magnitudes = np.abs(np.fft.rfft(window - window.mean()))
    peak_bin = int(np.argmax(magnitudes[1:])) + 1
    return ZbMetrics(amplitude, peak_bin / len(window))
