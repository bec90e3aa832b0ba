"""
Strongly entangling layer blocks.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from circuits import Gate
from core.exceptions import AnsatzError


@dataclass(frozen=True)
class BlockSpec:
    """
    Shape of one parameterized block.

    Attributes:
        n_block_qubits: Wires per block (b), at least 2.
        n_layers: Strongly entangling layers per block (L), at least 1.
        entangling_range: CNOT ring stride; must not be a multiple of b.
    """
    n_block_qubits: int
    n_layers: int = 1
    entangling_range: int = 1

    def __post_init__(self):
        if self.n_block_qubits < 2:
            raise AnsatzError(f"Blocks need at least 2 qubits, got {self.n_block_qubits}")
        if self.n_layers < 1:
            raise AnsatzError(f"Blocks need at least 1 layer, got {self.n_layers}")
        if self.entangling_range % self.n_block_qubits == 0:
            raise AnsatzError(
                f"entangling_range {self.entangling_range} is a multiple of the block "
                f"width {self.n_block_qubits}; the CNOT ring would target its own control"
            )

    @property
    def weight_shape(self):
        return (self.n_layers, self.n_block_qubits, 3)

    @property
    def n_params(self) -> int:
        return self.n_layers * self.n_block_qubits * 3


def sel_block(spec: BlockSpec, wires: Sequence[int], params: Optional[np.ndarray] = None,
              param_offset: Optional[int] = None) -> List[Gate]:
    """
    Gates of one block of strongly entangling layers.

    Each layer applies Rot(omega, theta, phi) to every wire and then the
    CNOT ring wire_i -> wire_{(i + range) mod b}.

    Args:
        spec: Block shape.
        wires: The b wires the block acts on.
        params: Angles of shape (L, b, 3); zeros when None.
        param_offset: Start of this block's angles in a flat parameter
            vector. When given, the Rot gates become trainable.

    Returns:
        List[Gate]: Gates in application order.

    Raises:
        AnsatzError: On a wire count or parameter shape mismatch.
    """
    b = spec.n_block_qubits
    wires = list(wires)
    if len(wires) != b:
        raise AnsatzError(f"Block expects {b} wires, got {len(wires)}")

    weights = np.zeros(spec.weight_shape) if params is None else np.asarray(params, dtype=float)
    if weights.shape != spec.weight_shape:
        raise AnsatzError(f"Block parameters must have shape {spec.weight_shape}, got {weights.shape}")

    gates = []
    for layer in range(spec.n_layers):
        for i, wire in enumerate(wires):
            index = None if param_offset is None else param_offset + (layer * b + i) * 3
            gates.append(Gate.rot(wire, *weights[layer, i], param_index=index))
        for i in range(b):
            gates.append(Gate.cnot(wires[i], wires[(i + spec.entangling_range) % b]))
    return gates
