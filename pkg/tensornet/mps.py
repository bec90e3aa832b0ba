"""
Matrix product state factorization by sequential SVD.
"""

import logging
from typing import List, Optional

import numpy as np

from core.exceptions import TensorNetworkError
from .network import OPEN, TensorNetworkGraph, contract_network
from .tensor import DenseTensor

logger = logging.getLogger(__name__)

DEFAULT_CUTOFF = 1e-12


def _bond_labels(physical, count: int) -> List[str]:
    taken = set(physical)
    labels, index = [], 0
    while len(labels) < count:
        candidate = f"bond{index}"
        if candidate not in taken:
            labels.append(candidate)
        index += 1
    return labels


def mps_factorize(a: DenseTensor, max_bond: Optional[int] = None,
                  cutoff: float = DEFAULT_CUTOFF) -> List[DenseTensor]:
    """
    Factor a tensor into a chain of site tensors.

    Site ``k`` carries physical label ``a.labels[k]``. Bond labels are
    ``bond0``, ``bond1``, ... (skipping names already used by ``a``). The
    first site is (phys, bond), inner sites (bond_left, phys, bond_right) and
    the last site (bond, phys).

    Args:
        a: Tensor of rank >= 2.
        max_bond: Largest bond dimension kept, or None for no limit.
        cutoff: Singular values below ``cutoff * s_max`` are dropped.

    Returns:
        List[DenseTensor]: Site tensors in physical-label order.

    Raises:
        TensorNetworkError: If the rank is below 2 or max_bond < 1.
    """
    if a.rank < 2:
        raise TensorNetworkError(f"mps_factorize needs rank >= 2, got {a.rank}")
    if max_bond is not None and max_bond < 1:
        raise TensorNetworkError(f"max_bond must be >= 1, got {max_bond}")

    dims = a.shape
    n_sites = len(dims)
    bonds = _bond_labels(a.labels, n_sites - 1)

    factors = []
    rank_left = 1
    remainder = a.data.reshape(dims[0], -1)
    for k in range(n_sites - 1):
        matrix = remainder.reshape(rank_left * dims[k], -1)
        u, s, vh = np.linalg.svd(matrix, full_matrices=False)

        keep = int(np.sum(s > cutoff * s[0])) if s[0] > 0 else 1
        keep = max(keep, 1)
        if max_bond is not None:
            keep = min(keep, max_bond)

        core = u[:, :keep].reshape(rank_left, dims[k], keep)
        if k == 0:
            factors.append(DenseTensor(core[0], (a.labels[0], bonds[0])))
        else:
            factors.append(DenseTensor(core, (bonds[k - 1], a.labels[k], bonds[k])))

        remainder = s[:keep, None] * vh[:keep, :]
        rank_left = keep

    last = remainder.reshape(rank_left, dims[-1])
    factors.append(DenseTensor(last, (bonds[-1], a.labels[-1])))
    logger.debug("MPS bond dimensions %s", [f.dim(b) for f, b in zip(factors, bonds)])
    return factors


def bond_dimensions(factors: List[DenseTensor]) -> List[int]:
    """Internal bond dimensions of a factor chain."""
    return [f.shape[-1] for f in factors[:-1]]


def mps_network(factors: List[DenseTensor]) -> TensorNetworkGraph:
    """
    Wrap MPS factors as a chain network with one open edge per site.

    Vertices are the site indices 0..n-1.
    """
    tn = TensorNetworkGraph()
    for site, factor in enumerate(factors):
        tn.add_vertex(site, factor)
    for site in range(len(factors) - 1):
        label = factors[site].labels[-1]
        tn.add_edge(site, site + 1, factors[site].dim(label), label)
    for site, factor in enumerate(factors):
        physical = factor.labels[0] if site == 0 else factor.labels[1]
        tn.add_edge(site, OPEN, factor.dim(physical), physical)
    return tn


def mps_reconstruct(factors: List[DenseTensor]) -> DenseTensor:
    """Contract an MPS chain back into a dense tensor over its physical labels."""
    path = [(0, site) for site in range(1, len(factors))]
    return contract_network(mps_network(factors), path)


def truncation_error(a: DenseTensor, max_bond: Optional[int] = None) -> float:
    """Frobenius norm of ``a`` minus its bond-limited reconstruction."""
    approx = mps_reconstruct(mps_factorize(a, max_bond)).transpose(a.labels)
    return float(np.linalg.norm(a.data - approx.data))
