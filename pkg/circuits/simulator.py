"""
Dense statevector simulation.

States are pure and stored as complex arrays of length 2^n with wire 0 as
the most significant bit of the basis index. Internally a batch of states
is kept as an array of shape (B, 2, ..., 2) so one pass through a circuit
can evolve many inputs at once.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from core.exceptions import CircuitError
from .circuit import Circuit
from .gates import Basis, Gate, GateKind

logger = logging.getLogger(__name__)

NORM_ATOL = 1e-10
MAX_UNITARY_QUBITS = 10


@dataclass
class Statevector:
    """Pure state of ``n_qubits`` qubits."""
    amplitudes: np.ndarray

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=complex).ravel()
        size = amplitudes.size
        if size < 2 or size & (size - 1):
            raise CircuitError(f"Statevector length must be a power of two >= 2, got {size}")
        self.amplitudes = amplitudes

    @property
    def n_qubits(self) -> int:
        return int(self.amplitudes.size).bit_length() - 1

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @classmethod
    def zero(cls, n_qubits: int) -> "Statevector":
        """The all-zero basis state |0...0>."""
        amplitudes = np.zeros(2 ** n_qubits, dtype=complex)
        amplitudes[0] = 1.0
        return cls(amplitudes)

    @classmethod
    def basis(cls, bits: str) -> "Statevector":
        """Basis state from a bit string, wire 0 first ("10" is |10>)."""
        amplitudes = np.zeros(2 ** len(bits), dtype=complex)
        amplitudes[int(bits, 2)] = 1.0
        return cls(amplitudes)

    def copy(self) -> "Statevector":
        return Statevector(self.amplitudes.copy())


def _check_wires(wires: Sequence[int], n_qubits: int) -> None:
    for wire in wires:
        if not 0 <= wire < n_qubits:
            raise CircuitError(f"Wire {wire} out of range for {n_qubits} qubits")


def _apply_matrix(states: np.ndarray, matrix: np.ndarray, wires: Sequence[int]) -> np.ndarray:
    """Apply a k-qubit matrix to axes ``1 + wires`` of a (B, 2, ..., 2) array."""
    k = len(wires)
    tensor = np.asarray(matrix, dtype=complex).reshape((2,) * (2 * k))
    state_axes = [1 + w for w in wires]
    out = np.tensordot(tensor, states, axes=(list(range(k, 2 * k)), state_axes))
    return np.moveaxis(out, list(range(k)), state_axes)


def _apply_cnot(states: np.ndarray, control: int, target: int) -> np.ndarray:
    """Flip the target axis on the control=1 slice."""
    out = states.copy()
    index = [slice(None)] * states.ndim
    index[1 + control] = 1
    index = tuple(index)
    # Removing the control axis shifts the target axis down when it follows it
    target_axis = 1 + target - (1 if target > control else 0)
    out[index] = np.flip(states[index], axis=target_axis)
    return out


def _apply_gate_batch(states: np.ndarray, gate: Gate) -> np.ndarray:
    if gate.kind is GateKind.CNOT:
        return _apply_cnot(states, *gate.wires)
    if gate.kind is GateKind.BASIS_CHANGE and gate.basis is Basis.Z:
        return states
    return _apply_matrix(states, gate.unitary_matrix(), gate.wires)


def apply_gate(state: Statevector, gate: Gate) -> Statevector:
    """
    Evolve a state by one gate.

    Args:
        state: Input state (not modified).
        gate: Gate to apply.

    Returns:
        Statevector: New state.

    Raises:
        CircuitError: If a gate wire is outside the state's width.
    """
    n = state.n_qubits
    _check_wires(gate.wires, n)
    states = state.amplitudes.reshape((1,) + (2,) * n)
    return Statevector(_apply_gate_batch(states, gate).reshape(-1))


def _prepare_circuit(circuit: Circuit, params, ignore_cuts: bool) -> Circuit:
    if circuit.cut_markers and not ignore_cuts:
        raise CircuitError(
            "Circuit has cut markers; evaluate it through the cutting module "
            "or pass ignore_cuts=True for the uncut value",
            details={"cuts": len(circuit.cut_markers)},
        )
    return circuit.bind(params)


def run_batch(circuit: Circuit, params=None, initial_states: Optional[np.ndarray] = None,
              ignore_cuts: bool = False) -> np.ndarray:
    """
    Evolve a batch of states through a circuit in one pass.

    Args:
        circuit: Circuit to simulate.
        params: Flat parameter vector bound into trainable Rot gates, or None.
        initial_states: Array of shape (B, 2^n); defaults to a single |0...0>.
        ignore_cuts: Simulate the circuit as if it had no cut markers.

    Returns:
        np.ndarray: Output states of shape (B, 2^n).

    Raises:
        CircuitError: On parameter count mismatch, cut markers, or bad shapes.
    """
    bound = _prepare_circuit(circuit, params, ignore_cuts)
    n = bound.n_qubits
    dim = 2 ** n

    if initial_states is None:
        states = np.zeros((1, dim), dtype=complex)
        states[0, 0] = 1.0
    else:
        states = np.array(initial_states, dtype=complex, ndmin=2)
        if states.shape[1] != dim:
            raise CircuitError(f"Initial states have length {states.shape[1]}, circuit needs {dim}")

    batch = states.shape[0]
    tensor = states.reshape((batch,) + (2,) * n)
    for gate in bound.gates:
        tensor = _apply_gate_batch(tensor, gate)
    out = tensor.reshape(batch, dim)
    logger.debug("Simulated %d gates on %d qubits for %d state(s)", len(bound.gates), n, batch)

    norms = np.linalg.norm(out, axis=1)
    if initial_states is None and np.any(np.abs(norms - 1.0) > NORM_ATOL):
        raise CircuitError(f"Norm drifted to {norms.max():.3e} after {len(bound.gates)} gates")
    return out


def run(circuit: Circuit, params=None, initial_state: Optional[Statevector] = None,
        ignore_cuts: bool = False) -> Statevector:
    """
    Simulate a circuit from |0...0> (or ``initial_state``).

    Args:
        circuit: Circuit to simulate.
        params: Flat parameter vector for trainable Rot gates, or None.
        initial_state: Optional starting state.
        ignore_cuts: Simulate the circuit as if it had no cut markers.

    Returns:
        Statevector: Final state.
    """
    initial = None if initial_state is None else initial_state.amplitudes[None, :]
    return Statevector(run_batch(circuit, params, initial, ignore_cuts)[0])


def circuit_unitary(circuit: Circuit, params=None) -> np.ndarray:
    """
    Full matrix of a circuit (cut markers ignored).

    Args:
        circuit: Circuit of at most 10 qubits.
        params: Optional flat parameter vector.

    Returns:
        np.ndarray: 2^n x 2^n unitary.
    """
    if circuit.n_qubits > MAX_UNITARY_QUBITS:
        raise CircuitError(f"circuit_unitary supports up to {MAX_UNITARY_QUBITS} qubits")
    dim = 2 ** circuit.n_qubits
    columns = run_batch(circuit, params, np.eye(dim, dtype=complex), ignore_cuts=True)
    return columns.T


def probabilities(state: Statevector) -> np.ndarray:
    """Born probabilities of every basis state."""
    return np.abs(state.amplitudes) ** 2


def marginal_probabilities(state: Statevector, wires: Sequence[int]) -> np.ndarray:
    """
    Joint Z-basis distribution of ``wires``.

    Args:
        state: Input state.
        wires: Wires to keep, in the order of the output axes.

    Returns:
        np.ndarray: Array of shape (2,) * len(wires).
    """
    n = state.n_qubits
    _check_wires(wires, n)
    probs = probabilities(state).reshape((2,) * n)
    others = tuple(ax for ax in range(n) if ax not in wires)
    marginal = probs.sum(axis=others) if others else probs
    # Summation keeps the remaining axes in increasing wire order
    kept = sorted(wires)
    return np.transpose(marginal, [kept.index(w) for w in wires])


def expval_z_batch(states: np.ndarray, wire: int) -> np.ndarray:
    """<Z> on ``wire`` for each row of a (B, 2^n) state array."""
    states = np.asarray(states)
    n = int(states.shape[1]).bit_length() - 1
    _check_wires([wire], n)
    probs = (np.abs(states) ** 2).reshape((states.shape[0], 2 ** wire, 2, -1))
    marginal = probs.sum(axis=(1, 3))
    return marginal[:, 0] - marginal[:, 1]


def expval_z(state: Statevector, wire: int) -> float:
    """
    Pauli-Z expectation value on one wire.

    Args:
        state: Input state.
        wire: Measured wire.

    Returns:
        float: Value in [-1, 1].

    Raises:
        CircuitError: If the wire is out of range.
    """
    return float(expval_z_batch(state.amplitudes[None, :], wire)[0])


def sample_z(state: Statevector, wire: int, shots: int, seed: int = 0) -> np.ndarray:
    """
    Draw Z-basis outcomes (+1 for |0>, -1 for |1>) on one wire.

    Args:
        state: Input state.
        wire: Measured wire.
        shots: Number of samples, at least 1.
        seed: Seed of the sampling generator.

    Returns:
        np.ndarray: Integer array of +1/-1 values.

    Raises:
        CircuitError: If ``shots`` < 1 or the wire is out of range.
    """
    if shots < 1:
        raise CircuitError(f"shots must be at least 1, got {shots}")
    p_one = (1.0 - expval_z(state, wire)) / 2.0
    rng = np.random.default_rng(seed)
    return np.where(rng.random(shots) < p_one, -1, 1)
