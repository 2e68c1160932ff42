"""Gate-level realization of one walk step, with a statevector simulator.

Register layout: qubit 0 is the spin wire, qubits 1..n hold the position
index big-endian (qubit 1 is the most significant position bit), so the
statevector index s*N + x matches the spin-major amplitude layout of
:class:`~diracwalk.state.SpinorField`.

The step circuit is: transform on the position register; a spin-controlled
phase ladder putting exp(+2*pi*i*j*dt/N) on the spin=1 branch; a coin
rotation on the spin wire; an anti-controlled ladder putting
exp(-2*pi*i*j*dt/N) on the spin=0 branch; the inverse transform.  Because
the momentum phases are diagonal, a fractional dt costs exactly the same
gates as dt = 1: the phase angles just scale.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

import numpy as np

from .evolution import WalkParams

__all__ = [
    "Gate",
    "QCircuit",
    "hadamard",
    "pauli_x",
    "phase",
    "cphase",
    "rotation_x",
    "swap",
    "build_qft",
    "build_step_circuit",
    "simulate_statevector",
    "circuit_unitary",
    "depth_and_counts",
    "export_qasm",
    "parse_qasm",
]

GATE_KINDS = ("h", "x", "phase", "cphase", "rx", "swap")
UNITARY_QUBIT_LIMIT = 12


@dataclass(frozen=True)
class Gate:
    """One gate: kind, target qubit(s), optional angle and control.

    ``qubits`` holds the single target, or both wires for a swap.  Only
    controlled phases carry a control; ``control_state`` = 0 marks an
    anti-control (phase fires when the control wire reads 0).
    """

    kind: str
    qubits: tuple[int, ...]
    angle: float | None = None
    control: int | None = None
    control_state: int = 1

    def __post_init__(self) -> None:
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.angle is not None and not math.isfinite(self.angle):
            raise ValueError(f"gate angle must be finite, got {self.angle}")
        if self.control_state not in (0, 1):
            raise ValueError(f"control state must be 0 or 1, got {self.control_state}")
        if (self.kind == "cphase") != (self.control is not None):
            raise ValueError("exactly the controlled-phase kind carries a control")
        if (self.kind in ("phase", "cphase", "rx")) != (self.angle is not None):
            raise ValueError(f"gate kind {self.kind!r} and angle do not match")
        if len(self.qubits) != (2 if self.kind == "swap" else 1):
            raise ValueError(f"gate kind {self.kind!r} got qubits {self.qubits}")
        if len(set(self.touched())) != len(self.touched()):
            raise ValueError(f"gate wires must be distinct, got {self.touched()}")

    def touched(self) -> tuple[int, ...]:
        """All wires the gate acts on, controls included."""
        return self.qubits if self.control is None else self.qubits + (self.control,)


def hadamard(target: int) -> Gate:
    return Gate("h", (target,))


def pauli_x(target: int) -> Gate:
    return Gate("x", (target,))


def phase(angle: float, target: int) -> Gate:
    return Gate("phase", (target,), angle=float(angle))


def cphase(angle: float, control: int, target: int, control_state: int = 1) -> Gate:
    return Gate("cphase", (target,), angle=float(angle), control=control,
                control_state=control_state)


def rotation_x(angle: float, target: int) -> Gate:
    return Gate("rx", (target,), angle=float(angle))


def swap(a: int, b: int) -> Gate:
    return Gate("swap", (a, b))


@dataclass
class QCircuit:
    """An ordered gate list over ``n_qubits`` wires."""

    n_qubits: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.n_qubits < 1:
            raise ValueError(f"need at least one qubit, got {self.n_qubits}")
        for gate in self.gates:
            self._check(gate)

    def _check(self, gate: Gate) -> None:
        for q in gate.touched():
            if not 0 <= q < self.n_qubits:
                raise ValueError(
                    f"qubit {q} out of range for a {self.n_qubits}-qubit register"
                )

    def add(self, gate: Gate) -> None:
        self._check(gate)
        self.gates.append(gate)

    def extend(self, gates) -> None:
        for gate in gates:
            self.add(gate)


def _qft_gates(qubits: list[int]):
    """Transform gates on the given wires, most significant first.

    Per wire: a Hadamard then a ladder of controlled phases pi/2^d against
    the d-th wire below, followed by the wire-reversal swap network.
    """
    n = len(qubits)
    for i in range(n):
        yield hadamard(qubits[i])
        for d in range(1, n - i):
            yield cphase(math.pi / 2**d, control=qubits[i + d], target=qubits[i])
    for i in range(n // 2):
        yield swap(qubits[i], qubits[n - 1 - i])


def _inverted(gates: list[Gate]):
    for gate in reversed(gates):
        if gate.angle is None:
            yield gate
        else:
            yield Gate(gate.kind, gate.qubits, angle=-gate.angle,
                       control=gate.control, control_state=gate.control_state)


def build_qft(n_position: int) -> QCircuit:
    """Standalone transform circuit on ``n_position`` wires (wire 0 most
    significant); its dense unitary is the kernel w^{jl}/sqrt(N)."""
    if n_position < 1:
        raise ValueError(f"need at least one position qubit, got {n_position}")
    return QCircuit(n_position, list(_qft_gates(list(range(n_position)))))


def build_step_circuit(params: WalkParams) -> QCircuit:
    """Gate realization of one walk step on 1 + log2(N) qubits.

    A zero coin angle (massless walk) elides the spin rotation.
    """
    n = params.n_sites.bit_length() - 1
    position = list(range(1, n + 1))
    circ = QCircuit(n + 1)
    forward = list(_qft_gates(position))
    circ.extend(forward)
    weights = [2 ** (n - 1 - i) for i in range(n)]  # big-endian bit weights
    for qubit, weight in zip(position, weights):
        circ.add(cphase(2 * math.pi * weight * params.dt / params.n_sites,
                        control=0, target=qubit, control_state=1))
    if params.theta != 0.0:
        circ.add(rotation_x(params.theta, 0))
    for qubit, weight in zip(position, weights):
        circ.add(cphase(-2 * math.pi * weight * params.dt / params.n_sites,
                        control=0, target=qubit, control_state=0))
    circ.extend(_inverted(forward))
    return circ


_HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


def _apply_one_qubit(psi: np.ndarray, matrix: np.ndarray, qubit: int) -> np.ndarray:
    moved = np.moveaxis(psi, qubit, 0)
    return np.moveaxis(np.tensordot(matrix, moved, axes=(1, 0)), 0, qubit)


def _apply_gate(psi: np.ndarray, gate: Gate) -> np.ndarray:
    kind = gate.kind
    if kind == "h":
        return _apply_one_qubit(psi, _HADAMARD, gate.qubits[0])
    if kind == "x":
        return np.flip(psi, axis=gate.qubits[0])
    if kind == "rx":
        half = gate.angle / 2
        matrix = np.array(
            [[math.cos(half), -1j * math.sin(half)],
             [-1j * math.sin(half), math.cos(half)]]
        )
        return _apply_one_qubit(psi, matrix, gate.qubits[0])
    index: list = [slice(None)] * psi.ndim
    if kind == "phase":
        index[gate.qubits[0]] = 1
        psi = psi.copy()
        psi[tuple(index)] *= np.exp(1j * gate.angle)
        return psi
    if kind == "cphase":
        index[gate.qubits[0]] = 1
        index[gate.control] = gate.control_state
        psi = psi.copy()
        psi[tuple(index)] *= np.exp(1j * gate.angle)
        return psi
    # swap
    return np.swapaxes(psi, gate.qubits[0], gate.qubits[1])


def simulate_statevector(circ: QCircuit, amplitudes: np.ndarray) -> np.ndarray:
    """Apply the circuit's gates in order to a statevector."""
    state = np.asarray(amplitudes, dtype=complex)
    dim = 2**circ.n_qubits
    if state.shape != (dim,):
        raise ValueError(
            f"statevector length {state.shape} does not match {circ.n_qubits}-qubit register"
        )
    psi = state.reshape([2] * circ.n_qubits)
    for gate in circ.gates:
        psi = _apply_gate(psi, gate)
    return np.ascontiguousarray(psi).reshape(-1)


def circuit_unitary(circ: QCircuit) -> np.ndarray:
    """Dense unitary of the circuit, for verification at small sizes."""
    if circ.n_qubits > UNITARY_QUBIT_LIMIT:
        raise ValueError(f"dense unitary limited to {UNITARY_QUBIT_LIMIT} qubits")
    dim = 2**circ.n_qubits
    u = np.empty((dim, dim), dtype=complex)
    for col in range(dim):
        basis = np.zeros(dim, dtype=complex)
        basis[col] = 1.0
        u[:, col] = simulate_statevector(circ, basis)
    return u


def depth_and_counts(circ: QCircuit) -> dict[str, int]:
    """Greedy as-soon-as-possible layering and gate counts.

    Gates sharing any wire (controls included) cannot share a layer.
    """
    busy_until: dict[int, int] = {}
    depth = 0
    one_qubit = two_qubit = 0
    for gate in circ.gates:
        wires = gate.touched()
        if len(wires) == 1:
            one_qubit += 1
        else:
            two_qubit += 1
        layer = 1 + max((busy_until.get(q, 0) for q in wires), default=0)
        for q in wires:
            busy_until[q] = layer
        depth = max(depth, layer)
    return {"depth": depth, "one_qubit": one_qubit, "two_qubit": two_qubit}


def _angle_literal(angle: float) -> str:
    return f"{angle:.17g}"


def export_qasm(circ: QCircuit) -> str:
    """OpenQASM 2.0 text; anti-controls are lowered to X-conjugated controls."""
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg q[{circ.n_qubits}];"]
    for gate in circ.gates:
        if gate.kind == "h":
            lines.append(f"h q[{gate.qubits[0]}];")
        elif gate.kind == "x":
            lines.append(f"x q[{gate.qubits[0]}];")
        elif gate.kind == "phase":
            lines.append(f"u1({_angle_literal(gate.angle)}) q[{gate.qubits[0]}];")
        elif gate.kind == "rx":
            lines.append(f"rx({_angle_literal(gate.angle)}) q[{gate.qubits[0]}];")
        elif gate.kind == "swap":
            lines.append(f"swap q[{gate.qubits[0]}],q[{gate.qubits[1]}];")
        else:
            target = gate.qubits[0]
            cu1 = f"cu1({_angle_literal(gate.angle)}) q[{gate.control}],q[{target}];"
            if gate.control_state == 1:
                lines.append(cu1)
            else:
                lines.extend([f"x q[{gate.control}];", cu1, f"x q[{gate.control}];"])
    return "\n".join(lines) + "\n"


_QASM_GATE = re.compile(
    r"^(h|x|u1|cu1|rx|swap)\s*(?:\(([^)]+)\))?\s+q\[(\d+)\]\s*(?:,\s*q\[(\d+)\])?;$"
)
_QASM_QREG = re.compile(r"^qreg\s+q\[(\d+)\];$")


def parse_qasm(text: str) -> QCircuit:
    """Parse the subset grammar emitted by :func:`export_qasm`."""
    circ: QCircuit | None = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("OPENQASM") or line.startswith("include"):
            continue
        reg = _QASM_QREG.match(line)
        if reg:
            circ = QCircuit(int(reg.group(1)))
            continue
        if circ is None:
            raise ValueError("gate before qreg declaration")
        m = _QASM_GATE.match(line)
        if not m:
            raise ValueError(f"unsupported line: {line!r}")
        name, angle_text, first, second = m.groups()
        angle = float(angle_text) if angle_text is not None else None
        a = int(first)
        b = int(second) if second is not None else None
        if name == "h":
            circ.add(hadamard(a))
        elif name == "x":
            circ.add(pauli_x(a))
        elif name == "u1":
            circ.add(phase(angle, a))
        elif name == "rx":
            circ.add(rotation_x(angle, a))
        elif name == "swap":
            circ.add(swap(a, b))
        else:
            circ.add(cphase(angle, control=a, target=b))
    if circ is None:
        raise ValueError("no qreg declaration found")
    return circ
