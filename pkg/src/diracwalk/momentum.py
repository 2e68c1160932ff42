"""Transforms between real and momentum space, and per-mode propagators.

The forward transform has matrix entries w^{jl} / sqrt(N) with
w = exp(2*pi*i/N); the inverse is its conjugate transpose.  Diagonal
momentum phases carry fractional powers on the principal branch,
values[j] = exp(+-2*pi*i*j*dt/N) for j = 0..N-1, deliberately NOT the
symmetric-wavenumber branch: the closed-form hop amplitudes are geometric
sums over j = 0..N-1 and hold only here.  The symmetric wavenumbers of
``ModeGrid`` are used solely to compare against the exact per-mode
propagator.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .state import require_power_of_two

__all__ = [
    "dft_forward",
    "dft_inverse",
    "dft_matrix",
    "PhaseDiagonal",
    "phase_diagonal",
    "ModeGrid",
    "mode_grid",
    "exact_mode_propagator",
]


def dft_forward(component: np.ndarray) -> np.ndarray:
    """Unitary transform with kernel w^{jl}/sqrt(N) applied to one spin block."""
    component = np.asarray(component, dtype=complex)
    require_power_of_two(component.shape[-1], "transform length")
    # ifft carries the positive-exponent kernel; ortho makes it unitary
    return np.fft.ifft(component, norm="ortho")


def dft_inverse(component: np.ndarray) -> np.ndarray:
    """Conjugate transpose of :func:`dft_forward`."""
    component = np.asarray(component, dtype=complex)
    require_power_of_two(component.shape[-1], "transform length")
    return np.fft.fft(component, norm="ortho")


def dft_matrix(n_sites: int) -> np.ndarray:
    """Dense N x N forward-transform matrix, the O(N^2) reference kernel."""
    require_power_of_two(n_sites, "transform length")
    j = np.arange(n_sites)
    return np.exp(2j * np.pi * np.outer(j, j) / n_sites) / np.sqrt(n_sites)


@dataclass(frozen=True)
class PhaseDiagonal:
    """Diagonal momentum phases values[j] = exp(sign * 2*pi*i*j*dt/N)."""

    n_sites: int
    dt: float
    sign: str
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=complex)
        values.flags.writeable = False
        object.__setattr__(self, "values", values)


def phase_diagonal(sign: str, dt: float, n_sites: int) -> PhaseDiagonal:
    """Fractional power of the momentum phase operator on the j = 0..N-1 branch."""
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    require_power_of_two(n_sites)
    j = np.arange(n_sites)
    sgn = 1.0 if sign == "+" else -1.0
    values = np.exp(sgn * 2j * np.pi * j * dt / n_sites)
    return PhaseDiagonal(n_sites, float(dt), sign, values)


@dataclass(frozen=True)
class ModeGrid:
    """Symmetric wavenumbers k_j = 2*pi*j/N wrapped into (-pi, pi]."""

    n_sites: int
    k: np.ndarray

    def __post_init__(self) -> None:
        k = np.array(self.k, dtype=float)
        k.flags.writeable = False
        object.__setattr__(self, "k", k)


def mode_grid(n_sites: int) -> ModeGrid:
    require_power_of_two(n_sites)
    j = np.arange(n_sites)
    wrapped = np.where(j <= n_sites // 2, j, j - n_sites)
    return ModeGrid(n_sites, 2.0 * np.pi * wrapped / n_sites)


def exact_mode_propagator(k: float, mu: float, dt: float) -> np.ndarray:
    """Closed-form exp(-i*(-sigma_z*k + mu*sigma_x)*dt) for a single mode.

    With E = sqrt(k^2 + mu^2) this is cos(E*dt)*I - i*sin(E*dt)*H/E;
    for E = 0 it is the identity.
    """
    energy = float(np.hypot(k, mu))
    if energy == 0.0:
        return np.eye(2, dtype=complex)
    h = np.array([[-k, mu], [mu, k]], dtype=complex)
    return np.cos(energy * dt) * np.eye(2) - 1j * np.sin(energy * dt) / energy * h
