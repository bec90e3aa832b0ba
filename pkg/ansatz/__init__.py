"""
Parameterized MPS and TTN meta-ansatz circuits.
"""

from .blocks import BlockSpec, sel_block
from .layout import (
    AnsatzKind,
    AnsatzLayout,
    BondCut,
    ParamVector,
    nearest_valid_mps_qubits,
    random_params
)
from .builders import build_circuit, build_mps, build_ttn

__all__ = [
    'BlockSpec', 'sel_block',
    'AnsatzKind', 'AnsatzLayout', 'BondCut', 'ParamVector', 'nearest_valid_mps_qubits', 'random_params',
    'build_circuit', 'build_mps', 'build_ttn'
]
