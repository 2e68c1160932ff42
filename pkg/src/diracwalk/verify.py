"""Built-in oracle and invariant suite behind ``diracwalk verify``.

Every check is deterministic (seeded) and self-contained; the whole suite
runs in a few seconds.  Checks compare independent computation routes
wherever one exists: closed forms against literal sums, the spectral step
against the nearest-neighbor update, gate circuits against dense
operators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .amplitudes import emit_profile, transition_amplitude, transition_amplitude_bruteforce
from .circuit import build_step_circuit, circuit_unitary
from .evolution import StepOperator, WalkParams, dca_step, trotter_local_error
from .momentum import dft_matrix, exact_mode_propagator
from .observables import entropy_bits, reduced_external, reduced_internal
from .state import InitialCondition, SpinorField, init_state

__all__ = ["CheckResult", "run_all"]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _random_field(rng: np.random.Generator, n_sites: int) -> SpinorField:
    amps = rng.standard_normal(2 * n_sites) + 1j * rng.standard_normal(2 * n_sites)
    return SpinorField(n_sites, amps / np.linalg.norm(amps))


def _long_run_checks() -> list[CheckResult]:
    # one shared trajectory: 1000 fractional steps on a 256-site lattice
    params = WalkParams(n_sites=256, dt=0.5, mass=math.pi / 4, steps=1000)
    op = StepOperator(params)
    field = init_state(InitialCondition((1, 0), site=0), params.n_sites)
    worst_norm = 0.0
    entropy_low, entropy_high = math.inf, -math.inf
    worst_speed = 0.0
    for _ in range(params.steps):
        field = op.apply(field)
        worst_norm = max(worst_norm, abs(np.linalg.norm(field.amps) - 1.0))
        rho = reduced_internal(field)
        s = entropy_bits(rho)
        entropy_low, entropy_high = min(entropy_low, s), max(entropy_high, s)
        worst_speed = max(worst_speed, abs(-(rho[0, 0].real - rho[1, 1].real)))
    return [
        CheckResult(
            "norm_conservation",
            worst_norm <= 1e-9,
            f"max norm drift {worst_norm:.2e} over {params.steps} steps at N={params.n_sites}",
        ),
        CheckResult(
            "entropy_range",
            -1e-12 <= entropy_low and entropy_high <= 1 + 1e-9,
            f"entropy in [{entropy_low:.3e}, {entropy_high:.6f}] bits",
        ),
        CheckResult(
            "velocity_range",
            worst_speed <= 1 + 1e-12,
            f"max |velocity| {worst_speed:.12f}",
        ),
    ]


def _amplitude_row_sums() -> CheckResult:
    worst = 0.0
    for profile in emit_profile([1.0, 0.75, 0.5, 0.25], 64):
        worst = max(worst, abs(profile.probabilities.sum() - 1.0))
    return CheckResult(
        "amplitude_row_sums", worst <= 1e-10, f"max |sum - 1| = {worst:.2e} at N=64"
    )


def _amplitude_closed_form() -> CheckResult:
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(200):
        n = int(2 ** rng.integers(3, 9))
        q = int(rng.integers(-n // 2, n // 2 + 1))
        dt = float(rng.uniform(0.0, 2.0))
        sign = "+" if rng.random() < 0.5 else "-"
        worst = max(
            worst,
            abs(
                transition_amplitude(q, dt, n, sign)
                - transition_amplitude_bruteforce(q, dt, n, sign)
            ),
        )
    return CheckResult(
        "amplitude_closed_form", worst <= 1e-12, f"max |closed - sum| = {worst:.2e}"
    )


def _nearest_neighbor_limit() -> CheckResult:
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(20):
        theta = float(rng.uniform(0, 2 * math.pi))
        field = _random_field(rng, 32)
        params = WalkParams(n_sites=32, dt=1.0, mass=theta)
        delta = StepOperator(params).apply(field).amps - dca_step(field, theta).amps
        worst = max(worst, float(np.max(np.abs(delta))))
    return CheckResult(
        "nearest_neighbor_limit", worst <= 1e-12, f"max |step - update| = {worst:.2e}"
    )


def _transform_unitarity() -> CheckResult:
    f = dft_matrix(32)
    worst = float(np.max(np.abs(f.conj().T @ f - np.eye(32))))
    return CheckResult(
        "transform_unitarity", worst <= 1e-12, f"max |F^H F - I| = {worst:.2e} at N=32"
    )


def _entropy_identity() -> CheckResult:
    rng = np.random.default_rng(13)
    worst = 0.0
    for _ in range(20):
        field = _random_field(rng, 32)
        gap = abs(
            entropy_bits(reduced_internal(field)) - entropy_bits(reduced_external(field))
        )
        worst = max(worst, gap)
    return CheckResult(
        "entropy_identity", worst <= 1e-9, f"max |S(spin) - S(position)| = {worst:.2e}"
    )


def _mode_propagator_unitarity() -> CheckResult:
    rng = np.random.default_rng(17)
    worst = 0.0
    for _ in range(100):
        u = exact_mode_propagator(
            float(rng.uniform(-math.pi, math.pi)),
            float(rng.uniform(0, 3)),
            float(rng.uniform(0, 2)),
        )
        worst = max(worst, float(np.max(np.abs(u.conj().T @ u - np.eye(2)))))
        worst = max(worst, abs(abs(np.linalg.det(u)) - 1.0))
    return CheckResult(
        "mode_propagator_unitarity", worst <= 1e-12, f"max deviation {worst:.2e}"
    )


def _split_error_order() -> CheckResult:
    dts = np.array([0.2, 0.1, 0.05, 0.025])
    errors = np.array([trotter_local_error(1.0, 1.0, dt) for dt in dts])
    exponent = float(np.polyfit(np.log(dts), np.log(errors), 1)[0])
    return CheckResult(
        "split_error_order",
        2.7 <= exponent <= 3.3,
        f"fitted local-error exponent {exponent:.3f}",
    )


def _circuit_equivalence() -> CheckResult:
    params = WalkParams(n_sites=8, dt=0.63, mass=0.91)
    gap = float(
        np.max(
            np.abs(circuit_unitary(build_step_circuit(params)) - StepOperator(params).dense())
        )
    )
    return CheckResult(
        "circuit_equivalence", gap <= 1e-8, f"max |circuit - dense| = {gap:.2e} at N=8"
    )


def run_all() -> list[CheckResult]:
    """Run every check; callers decide how to report the results."""
    results = _long_run_checks()
    results += [
        _amplitude_row_sums(),
        _amplitude_closed_form(),
        _nearest_neighbor_limit(),
        _transform_unitarity(),
        _entropy_identity(),
        _mode_propagator_unitarity(),
        _split_error_order(),
        _circuit_equivalence(),
    ]
    return results
