"""Continuous-time quantum walk engine for 1D Dirac dynamics.

A spectral walk over a periodic lattice with a tunable time interval: at
dt = 1 it reduces to a nearest-neighbor cellular-automaton update, and at
fractional dt the translation acquires long-range hop amplitudes with a
known closed form.  The package also provides entanglement and velocity
observables, a gate-level circuit realization with a statevector
simulator and OpenQASM export, and a JSON-configured command line.
"""

from .amplitudes import (
    AmplitudeProfile,
    emit_profile,
    infinite_limit_prob,
    transition_amplitude,
    transition_amplitude_bruteforce,
)
from .circuit import (
    Gate,
    QCircuit,
    build_qft,
    build_step_circuit,
    circuit_unitary,
    depth_and_counts,
    export_qasm,
    parse_qasm,
    simulate_statevector,
)
from .evolution import (
    StepOperator,
    WalkParams,
    coin_matrix,
    cyclic_pull_matrix,
    dca_step,
    evolve,
    iter_evolve,
    split_mode_operator,
    step,
    translation_matrix,
    trotter_local_error,
)
from .momentum import (
    ModeGrid,
    PhaseDiagonal,
    dft_forward,
    dft_inverse,
    dft_matrix,
    exact_mode_propagator,
    mode_grid,
    phase_diagonal,
)
from .observables import (
    ObservableSeries,
    ZbMetrics,
    entropy_bits,
    observable_series,
    position_distribution,
    reduced_external,
    reduced_internal,
    velocity,
    zb_metrics,
)
from .state import (
    InitialCondition,
    SpinorField,
    display_coord,
    display_order,
    init_state,
    norm,
)

__version__ = "0.1.0"
