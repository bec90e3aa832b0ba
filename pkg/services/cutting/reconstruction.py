"""
Classical recombination of fragment results and cutting cost formulas.
"""

import logging
import math
from typing import Mapping, Optional

from core.exceptions import CuttingError
from tensornet import DenseTensor, contract_network, network_from_tensors
from .evaluation import FragmentResult
from .fragments import FragmentSet

logger = logging.getLogger(__name__)


def fragment_tensors(fs: FragmentSet, results: Mapping[int, FragmentResult]):
    """
    Labeled Pauli-basis tensor of every fragment.

    Each cut contributes one axis labeled ``cut<i>`` to its source and its
    sink fragment.

    Raises:
        CuttingError: If a fragment has no results.
    """
    tensors = []
    for fragment in fs.fragments:
        if fragment.index not in results:
            raise CuttingError(f"No results for fragment {fragment.index}")
        data = results[fragment.index].to_tensor(fragment)
        labels = tuple(f"cut{c}" for c in fragment.in_cuts + fragment.out_cuts)
        tensors.append((fragment.index, DenseTensor(data, labels)))
    return tensors


def reconstruct(fs: FragmentSet, results: Mapping[int, FragmentResult]) -> float:
    """
    Expectation value of the uncut circuit.

    Each cut expands the wire's identity channel into the four Paulis, so
    the value is (1/2)^cuts times the full contraction of the fragment
    tensors over their shared cut axes. Fragments are contracted in
    topological order of the fragment graph.

    Args:
        fs: Partitioned circuit.
        results: Results per fragment id, every setting present.

    Returns:
        float: Reconstructed <Z> of the measured wire.

    Raises:
        CuttingError: On missing results.
    """
    network = network_from_tensors(fragment_tensors(fs, results))
    order = fs.topological_order()
    path = [(order[0], other) for other in order[1:]]
    total = contract_network(network, path).value
    value = total.real * 0.5 ** len(fs.cut_edges)
    if abs(total.imag) > 1e-9:
        logger.warning("Reconstruction has imaginary part %.3e", total.imag)
    return float(value)


def count_configs_mps(n: int, n_v: int, block_qubits: Optional[int] = None) -> int:
    """
    Fragment settings of a fully cut MPS circuit.

    With k = (n - n_V)/(b - n_V) blocks the count is
    3^n_V + (k - 2) * 12^n_V + 4^n_V; for b = 2 n_V this is
    3^n_V + (n/n_V - 3) * 4^n_V * 3^n_V + 4^n_V.

    Raises:
        CuttingError: Unless the sizes give an integral k >= 2.
    """
    b = 2 * n_v if block_qubits is None else block_qubits
    if n_v < 1 or b <= n_v:
        raise CuttingError(f"Need 1 <= n_V < b, got n_V={n_v}, b={b}")
    if (n - n_v) % (b - n_v):
        raise CuttingError(f"n={n} is not covered by blocks of {b} qubits sharing {n_v}")
    k = (n - n_v) // (b - n_v)
    if k < 2:
        raise CuttingError(f"A cut MPS needs at least 2 blocks, got {k}")
    return 3 ** n_v + (k - 2) * 12 ** n_v + 4 ** n_v


def count_configs_ttn(n: int, n_v: int) -> int:
    """
    Fragment settings of a fully cut TTN circuit.

    With L = n/(2 n_V) leaves: 3^n_V * L + 3^n_V * 4^(2 n_V) * (L - 2) + 4^(2 n_V).

    Raises:
        CuttingError: Unless L is a power of two >= 2.
    """
    if n_v < 1 or n % (2 * n_v):
        raise CuttingError(f"n={n} is not a multiple of 2*n_V={2 * n_v}")
    leaves = n // (2 * n_v)
    if leaves < 2 or leaves & (leaves - 1):
        raise CuttingError(f"A TTN needs a power-of-two number of leaves >= 2, got {leaves}")
    return 3 ** n_v * leaves + 3 ** n_v * 16 ** n_v * (leaves - 2) + 16 ** n_v


def estimate_cost(d_max: int, k: int, eps: float) -> float:
    """
    Relative cost 8^(3 d_max) * d_max * k^3 * ln(k) / eps^2.

    Only ratios between estimates are meaningful; k = 1 gives 0.

    Raises:
        CuttingError: If eps <= 0, k < 1 or d_max < 0.
    """
    if eps <= 0:
        raise CuttingError(f"Precision must be positive, got {eps}")
    if k < 1 or d_max < 0:
        raise CuttingError(f"Need k >= 1 and d_max >= 0, got k={k}, d_max={d_max}")
    return float(8.0 ** (3 * d_max) * d_max * k ** 3 * math.log(k) / eps ** 2)


def summarize(fs: FragmentSet) -> dict:
    """Sizes of a partition, as used in reports."""
    return {
        "n_fragments": fs.k,
        "n_cuts": len(fs.cut_edges),
        "n_configs": fs.n_configs,
        "d_max": fs.d_max,
        "fragment_qubits": [f.n_qubits for f in fs.fragments],
    }

