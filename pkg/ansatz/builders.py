"""
Circuit builders for the MPS and TTN meta-ansatzes.
"""

import logging
from typing import Optional, Union

import numpy as np

from circuits import Circuit
from core.exceptions import AnsatzError
from .blocks import sel_block
from .layout import AnsatzKind, AnsatzLayout, ParamVector, as_values

logger = logging.getLogger(__name__)

Params = Optional[Union[ParamVector, np.ndarray]]


def _build(layout: AnsatzLayout, params: Params) -> Circuit:
    values = as_values(params, layout)
    weights = ParamVector.for_layout(layout, values)
    cuts_after = {cut.block: cut.wires for cut in layout.bond_cuts}

    circuit = Circuit(layout.n_qubits, measured_wire=layout.measured_wire)
    for index, wires in enumerate(layout.block_wire_map):
        weight_set = 0 if layout.share_weights else index
        circuit.extend(sel_block(
            layout.block,
            wires,
            weights.block_weights(weight_set),
            param_offset=layout.param_offset(index),
        ))
        for wire in cuts_after.get(index, ()):
            circuit.add_cut(wire)

    logger.debug("Built %s with %d gates and %d cuts", layout, len(circuit), circuit.cut_count)
    return circuit


def build_mps(layout: AnsatzLayout, params: Params = None) -> Circuit:
    """
    Circuit of an MPS meta-ansatz.

    Args:
        layout: Layout from ``AnsatzLayout.mps``.
        params: ParamVector or flat array; zeros when None.

    Returns:
        Circuit: Trainable circuit with a cut marker on every bond wire
            and the last wire measured.

    Raises:
        AnsatzError: If the layout is not an MPS or the parameters do not fit.
    """
    if layout.kind is not AnsatzKind.MPS:
        raise AnsatzError(f"build_mps needs an MPS layout, got {layout.kind.value}")
    return _build(layout, params)


def build_ttn(layout: AnsatzLayout, params: Params = None) -> Circuit:
    """
    Circuit of a TTN meta-ansatz.

    Blocks are emitted level by level. The wires a block does not pass on
    are left untouched for the rest of the circuit.

    Args:
        layout: Layout from ``AnsatzLayout.ttn``.
        params: ParamVector or flat array; zeros when None.

    Returns:
        Circuit: Trainable circuit with cut markers on every passed bond
            group, measured on the root block's highest wire.

    Raises:
        AnsatzError: If the layout is not a TTN or the parameters do not fit.
    """
    if layout.kind is not AnsatzKind.TTN:
        raise AnsatzError(f"build_ttn needs a TTN layout, got {layout.kind.value}")
    return _build(layout, params)


def build_circuit(layout: AnsatzLayout, params: Params = None) -> Circuit:
    """Build whichever meta-ansatz ``layout`` describes."""
    if layout.kind is AnsatzKind.MPS:
        return build_mps(layout, params)
    return build_ttn(layout, params)
