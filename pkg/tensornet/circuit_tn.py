"""
Export a circuit's Pauli-Z expectation value as a tensor network.

The network holds one |0><0| tensor per wire, a tensor for every gate on
the ket side and its complex conjugate on the bra side, and one observable
tensor per wire closing the trace. Contracting it gives
Tr(O U|0><0|U^dagger) with O = Z on the measured wire and I elsewhere.
"""

from typing import Dict, Optional, Sequence

import numpy as np

from circuits import Circuit
from circuits.gates import IDENTITY, PAULI_Z
from core.exceptions import TensorNetworkError
from .network import TensorNetworkGraph
from .tensor import DenseTensor

KET_ZERO_PROJECTOR = np.array([[1, 0], [0, 0]], dtype=complex)


def circuit_to_tn(circuit: Circuit, params: Optional[Sequence[float]] = None) -> TensorNetworkGraph:
    """
    Build the expectation-value network of a circuit.

    Vertex ids are ("rho", wire), ("U", gate_index), ("Udag", gate_index)
    and ("O", wire). Cut markers are ignored. Every edge has dimension 2.

    Args:
        circuit: Circuit with a measured wire.
        params: Optional flat parameter vector bound before export.

    Returns:
        TensorNetworkGraph: Closed network (no open edges).

    Raises:
        TensorNetworkError: If the circuit has no measured wire.
    """
    if circuit.measured_wire is None:
        raise TensorNetworkError("circuit_to_tn needs a circuit with a measured_wire")

    bound = circuit.bind(params)
    n = bound.n_qubits
    tn = TensorNetworkGraph()

    # Current (vertex, label) at the open end of each wire, per side
    ket: Dict[int, tuple] = {}
    bra: Dict[int, tuple] = {}
    for wire in range(n):
        ket_label, bra_label = f"k{wire}_0", f"b{wire}_0"
        tn.add_vertex(("rho", wire), DenseTensor(KET_ZERO_PROJECTOR, (ket_label, bra_label)))
        ket[wire] = (("rho", wire), ket_label)
        bra[wire] = (("rho", wire), bra_label)

    for index, gate in enumerate(bound.gates):
        k = len(gate.wires)
        matrix = np.asarray(gate.unitary_matrix(), dtype=complex).reshape((2,) * (2 * k))
        ket_out = [f"k{w}_{index + 1}" for w in gate.wires]
        bra_out = [f"b{w}_{index + 1}" for w in gate.wires]
        ket_in = [ket[w][1] for w in gate.wires]
        bra_in = [bra[w][1] for w in gate.wires]

        u_vertex, udag_vertex = ("U", index), ("Udag", index)
        tn.add_vertex(u_vertex, DenseTensor(matrix, tuple(ket_out + ket_in)))
        tn.add_vertex(udag_vertex, DenseTensor(matrix.conj(), tuple(bra_out + bra_in)))
        for wire, label_out, label_bra_out in zip(gate.wires, ket_out, bra_out):
            prev_vertex, prev_label = ket[wire]
            tn.add_edge(prev_vertex, u_vertex, 2, prev_label)
            prev_vertex, prev_label = bra[wire]
            tn.add_edge(prev_vertex, udag_vertex, 2, prev_label)
            ket[wire] = (u_vertex, label_out)
            bra[wire] = (udag_vertex, label_bra_out)

    for wire in range(n):
        observable = PAULI_Z if wire == bound.measured_wire else IDENTITY
        ket_vertex, ket_label = ket[wire]
        bra_vertex, bra_label = bra[wire]
        o_vertex = ("O", wire)
        tn.add_vertex(o_vertex, DenseTensor(observable, (bra_label, ket_label)))
        tn.add_edge(ket_vertex, o_vertex, 2, ket_label)
        tn.add_edge(bra_vertex, o_vertex, 2, bra_label)

    tn.validate(require_tensors=True)
    return tn
