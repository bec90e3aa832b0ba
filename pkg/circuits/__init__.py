"""
Gate-level circuits and dense statevector simulation.
"""
from .gates import (
    Basis,
    Gate,
    GateKind,
    PrepState,
    is_unitary,
    rot_unitary,
    rot_unitaries
)
from .circuit import Circuit
from .simulator import (
    Statevector,
    apply_gate,
    circuit_unitary,
    expval_z,
    expval_z_batch,
    marginal_probabilities,
    probabilities,
    run,
    run_batch,
    sample_z
)

__all__ = [
    'Basis', 'Gate', 'GateKind', 'PrepState', 'is_unitary', 'rot_unitary', 'rot_unitaries',
    'Circuit',
    'Statevector', 'apply_gate', 'circuit_unitary', 'expval_z', 'expval_z_batch',
    'marginal_probabilities', 'probabilities', 'run', 'run_batch', 'sample_z'
]
