"""Single-step walk evolution and its nearest-neighbor limit.

One step applies, spectrally: forward transform of each spin block, the
phase exp(+2*pi*i*j*dt/N) on the s=1 block, a 2x2 coin rotation across the
blocks mode by mode, the phase exp(-2*pi*i*j*dt/N) on the s=0 block, and
the inverse transform.  The transform direction is pinned so that at
dt = 1 the step reduces elementwise to the cyclic nearest-neighbor update
of :func:`dca_step` (R pulls from x+1, L pulls from x-1); the test suite
asserts this rather than assuming it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .momentum import dft_forward, dft_inverse, dft_matrix, exact_mode_propagator, phase_diagonal
from .state import InitialCondition, SpinorField, init_state, require_power_of_two

__all__ = [
    "WalkParams",
    "StepOperator",
    "coin_matrix",
    "step",
    "dca_step",
    "evolve",
    "iter_evolve",
    "translation_matrix",
    "cyclic_pull_matrix",
    "split_mode_operator",
    "trotter_local_error",
]

DENSE_LIMIT = 64  # largest N for dense 2N x 2N materializations


@dataclass(frozen=True)
class WalkParams:
    """Walk parameters: lattice size, time interval, mass, coin angle, steps.

    The coin angle is theta = mass * dt; it may be passed explicitly but
    must then agree with the product to within 1e-14.
    """

    n_sites: int
    dt: float
    mass: float
    steps: int = 0
    theta: float | None = None

    def __post_init__(self) -> None:
        require_power_of_two(self.n_sites)
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.steps < 0:
            raise ValueError(f"steps must be >= 0, got {self.steps}")
        product = self.mass * self.dt
        if self.theta is None:
            object.__setattr__(self, "theta", product)
        elif abs(self.theta - product) > 1e-14:
            raise ValueError(
                f"theta={self.theta} inconsistent with mass*dt={product}"
            )


def coin_matrix(theta: float) -> np.ndarray:
    """The 2x2 coin [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]."""
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]])


class StepOperator:
    """One evolution step in factored spectral form.

    Precomputes the two phase diagonals and the coin entries; ``apply``
    costs four length-N transforms.  ``dense`` materializes the full
    2N x 2N unitary for small lattices only.
    """

    def __init__(self, params: WalkParams):
        self.params = params
        self._phase_plus = phase_diagonal("+", params.dt, params.n_sites).values
        self._phase_minus = phase_diagonal("-", params.dt, params.n_sites).values
        self._cos = math.cos(params.theta / 2)
        self._sin = math.sin(params.theta / 2)

    def apply(self, field: SpinorField) -> SpinorField:
        if field.n_sites != self.params.n_sites:
            raise ValueError(
                f"field has {field.n_sites} sites, operator expects {self.params.n_sites}"
            )
        blocks = field.as_matrix()
        r = dft_forward(blocks[0])
        l = dft_forward(blocks[1])
        l = self._phase_plus * l
        r, l = self._cos * r - 1j * self._sin * l, -1j * self._sin * r + self._cos * l
        r = self._phase_minus * r
        return SpinorField.from_matrix(np.vstack([dft_inverse(r), dft_inverse(l)]))

    def dense(self) -> np.ndarray:
        n = self.params.n_sites
        if n > DENSE_LIMIT:
            raise ValueError(f"dense materialization limited to N <= {DENSE_LIMIT}")
        dim = 2 * n
        u = np.empty((dim, dim), dtype=complex)
        for col in range(dim):
            basis = np.zeros(dim, dtype=complex)
            basis[col] = 1.0
            u[:, col] = self.apply(SpinorField(n, basis)).amps
        return u


def step(field: SpinorField, params: WalkParams) -> SpinorField:
    """Apply one evolution step to ``field``."""
    return StepOperator(params).apply(field)


def dca_step(field: SpinorField, theta: float) -> SpinorField:
    """Nearest-neighbor cyclic update, the dt = 1 limit of :func:`step`.

    R(x) <- cos(theta/2) R(x+1) - i sin(theta/2) L(x)
    L(x) <- cos(theta/2) L(x-1) - i sin(theta/2) R(x)
    computed from the pre-step values, indices modulo N.
    """
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    blocks = field.as_matrix()
    new_r = c * np.roll(blocks[0], -1) - 1j * s * blocks[1]
    new_l = c * np.roll(blocks[1], 1) - 1j * s * blocks[0]
    return SpinorField.from_matrix(np.vstack([new_r, new_l]))


def iter_evolve(ic: InitialCondition, params: WalkParams) -> Iterator[SpinorField]:
    """Yield the initial state followed by ``params.steps`` evolved states."""
    field = init_state(ic, params.n_sites)
    op = StepOperator(params)
    yield field
    for _ in range(params.steps):
        field = op.apply(field)
        yield field


def evolve(ic: InitialCondition, params: WalkParams) -> list[SpinorField]:
    """Full trajectory of ``params.steps`` + 1 states (use :func:`iter_evolve`
    to stream observables without storing snapshots)."""
    return list(iter_evolve(ic, params))


def translation_matrix(sign: str, dt: float, n_sites: int) -> np.ndarray:
    """Dense real-space matrix of the fractional cyclic translation.

    Built as inverse-transform . diagonal . forward-transform, i.e. exactly
    the per-block operator inside :class:`StepOperator`.  At integer dt it
    is a permutation matrix: sign '-' pulls from x+dt, sign '+' from x-dt.
    """
    if n_sites > 4 * DENSE_LIMIT:
        raise ValueError(f"dense translation matrix limited to N <= {4 * DENSE_LIMIT}")
    f = dft_matrix(n_sites)
    d = phase_diagonal(sign, dt, n_sites).values
    return f.conj().T @ (d[:, None] * f)


def cyclic_pull_matrix(n_sites: int, offset: int) -> np.ndarray:
    """Permutation matrix P with (P psi)(x) = psi(x + offset mod N)."""
    m = np.zeros((n_sites, n_sites))
    cols = (np.arange(n_sites) + offset) % n_sites
    m[np.arange(n_sites), cols] = 1.0
    return m


def split_mode_operator(k: float, mu: float, dt: float) -> np.ndarray:
    """Per-mode split step diag(e^{ik dt}, 1) . coin(2 mu dt) . diag(1, e^{-ik dt}).

    Equal to the symmetric splitting e^{i sigma_z k dt/2} e^{-i mu sigma_x dt}
    e^{i sigma_z k dt/2}, so its deviation from the exact propagator is the
    local splitting error.
    """
    left = np.diag([np.exp(1j * k * dt), 1.0])
    right = np.diag([1.0, np.exp(-1j * k * dt)])
    return left @ coin_matrix(2.0 * mu * dt) @ right


def trotter_local_error(k: float, mu: float, dt: float) -> float:
    """Max-entry deviation of the per-mode split step from the exact propagator."""
    return float(
        np.max(np.abs(split_mode_operator(k, mu, dt) - exact_mode_propagator(k, mu, dt)))
    )
