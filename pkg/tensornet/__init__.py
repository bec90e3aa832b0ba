"""
Tensors, tensor-network graphs, MPS factorization and circuit layouts.
"""

from .tensor import DenseTensor, contract_pair
from .network import (
    IN,
    OPEN,
    OUT,
    Edge,
    TensorNetworkGraph,
    contract_network,
    network_from_tensors,
)
from .mps import bond_dimensions, mps_factorize, mps_network, mps_reconstruct, truncation_error
from .circuit_tn import circuit_to_tn
from .layout import (
    CircuitLayout,
    LayoutPort,
    format_layout_text,
    layout_wire_count,
    merge_leading_blocks,
    mps_graph,
    pad_to_qubit_dims,
    parse_graph_text,
    peps_graph,
    tn_to_circuit_layout,
    wires_for_dim,
)

__all__ = [
    'DenseTensor', 'contract_pair',
    'IN', 'OPEN', 'OUT', 'Edge', 'TensorNetworkGraph', 'contract_network', 'network_from_tensors',
    'bond_dimensions', 'mps_factorize', 'mps_network', 'mps_reconstruct', 'truncation_error',
    'circuit_to_tn',
    'CircuitLayout', 'LayoutPort', 'format_layout_text', 'layout_wire_count', 'merge_leading_blocks',
    'mps_graph', 'pad_to_qubit_dims', 'parse_graph_text', 'peps_graph', 'tn_to_circuit_layout',
    'wires_for_dim',
]
