"""
Gate-sequence circuit with wire-cut markers and a terminal Pauli-Z observable.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import CircuitError
from .gates import Gate, GateKind


@dataclass
class Circuit:
    """
    Ordered gate list over ``n_qubits`` wires.

    Attributes:
        n_qubits: Circuit width.
        gates: Gates in application order.
        cut_markers: (wire, position) pairs. A marker cuts ``wire`` between
            the gates with index <= position and those with index > position.
        measured_wire: Wire carrying the terminal Pauli-Z observable.
    """
    n_qubits: int
    gates: List[Gate] = field(default_factory=list)
    cut_markers: List[Tuple[int, int]] = field(default_factory=list)
    measured_wire: Optional[int] = None

    def __post_init__(self):
        if self.n_qubits < 1:
            raise CircuitError(f"Circuit needs at least one qubit, got {self.n_qubits}")
        self.gates = list(self.gates)
        self.cut_markers = [(int(w), int(p)) for w, p in self.cut_markers]
        self.validate()

    def validate(self) -> None:
        """
        Check wire ranges of gates, markers and the measured wire.

        Raises:
            CircuitError: On any out-of-range reference.
        """
        for index, gate in enumerate(self.gates):
            if any(w >= self.n_qubits for w in gate.wires):
                raise CircuitError(
                    f"Gate {index} ({gate}) references a wire outside 0..{self.n_qubits - 1}",
                    details={"gate_index": index},
                )
        for wire, position in self.cut_markers:
            if not 0 <= wire < self.n_qubits:
                raise CircuitError(f"Cut marker on invalid wire {wire}")
            if not -1 <= position < len(self.gates):
                raise CircuitError(f"Cut marker position {position} outside the gate list")
        if self.measured_wire is not None and not 0 <= self.measured_wire < self.n_qubits:
            raise CircuitError(f"Measured wire {self.measured_wire} outside 0..{self.n_qubits - 1}")

    @property
    def n_params(self) -> int:
        """Length of the flat parameter vector this circuit binds."""
        offsets = [g.param_index for g in self.gates if g.kind is GateKind.ROT and g.param_index is not None]
        return max(offsets) + 3 if offsets else 0

    @property
    def cut_count(self) -> int:
        return len(self.cut_markers)

    def append(self, gate: Gate) -> "Circuit":
        """Append one gate, validating its wires. Returns self."""
        if any(w >= self.n_qubits for w in gate.wires):
            raise CircuitError(f"{gate} references a wire outside 0..{self.n_qubits - 1}")
        self.gates.append(gate)
        return self

    def extend(self, gates: Iterable[Gate]) -> "Circuit":
        for gate in gates:
            self.append(gate)
        return self

    def add_cut(self, wire: int, position: Optional[int] = None) -> "Circuit":
        """Mark a cut on ``wire`` after gate ``position`` (default: the last gate)."""
        position = len(self.gates) - 1 if position is None else position
        self.cut_markers.append((int(wire), int(position)))
        self.validate()
        return self

    def bind(self, params: Optional[Sequence[float]]) -> "Circuit":
        """
        Copy of this circuit with trainable Rot angles taken from ``params``.

        Args:
            params: Flat parameter vector of length ``n_params`` or None.

        Returns:
            Circuit: Circuit with concrete angles (self when params is None).

        Raises:
            CircuitError: If the parameter count does not match.
        """
        if params is None:
            return self
        values = np.asarray(params, dtype=float).ravel()
        if values.size != self.n_params:
            raise CircuitError(
                f"Parameter count mismatch: circuit expects {self.n_params}, got {values.size}",
                details={"expected": self.n_params, "got": int(values.size)},
            )
        gates = [
            g.with_params(values[g.param_index:g.param_index + 3])
            if g.kind is GateKind.ROT and g.param_index is not None else g
            for g in self.gates
        ]
        return Circuit(self.n_qubits, gates, list(self.cut_markers), self.measured_wire)

    def without_cuts(self) -> "Circuit":
        """Copy with cut markers removed."""
        return Circuit(self.n_qubits, list(self.gates), [], self.measured_wire)

    def count(self, kind: GateKind) -> int:
        return sum(1 for g in self.gates if g.kind is kind)

    def __len__(self):
        return len(self.gates)

    def __str__(self):
        lines = [f"Circuit(n_qubits={self.n_qubits}, measured_wire={self.measured_wire})"]
        lines.extend(f"  {i}: {g}" for i, g in enumerate(self.gates))
        if self.cut_markers:
            lines.append(f"  cuts: {self.cut_markers}")
        return "\n".join(lines)
