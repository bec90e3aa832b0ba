"""
Dense labeled tensors and pairwise contraction.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from core.exceptions import TensorNetworkError


@dataclass
class DenseTensor:
    """
    Complex array whose axes carry unique string labels.

    Attributes:
        data: Array with one axis per label.
        labels: Index labels, one per axis.
    """
    data: np.ndarray
    labels: Tuple[str, ...]

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=complex)
        self.labels = tuple(str(label) for label in self.labels)
        if self.data.ndim != len(self.labels):
            raise TensorNetworkError(
                f"Tensor has {self.data.ndim} axes but {len(self.labels)} labels {self.labels}"
            )
        if len(set(self.labels)) != len(self.labels):
            raise TensorNetworkError(f"Tensor labels must be distinct, got {self.labels}")

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(self.data.shape)

    @property
    def rank(self) -> int:
        return self.data.ndim

    @property
    def size(self) -> int:
        return int(self.data.size)

    @property
    def value(self) -> complex:
        """The scalar held by a rank-0 tensor."""
        if self.rank != 0:
            raise TensorNetworkError(f"Tensor of rank {self.rank} is not a scalar")
        return complex(self.data)

    def dim(self, label: str) -> int:
        return self.data.shape[self.axis(label)]

    def axis(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise TensorNetworkError(f"Label {label!r} not in tensor labels {self.labels}")

    def transpose(self, labels: Sequence[str]) -> "DenseTensor":
        """Reorder axes to follow ``labels``."""
        if sorted(labels) != sorted(self.labels):
            raise TensorNetworkError(f"Cannot transpose {self.labels} to {tuple(labels)}")
        return DenseTensor(np.transpose(self.data, [self.axis(l) for l in labels]), tuple(labels))

    def relabel(self, mapping: dict) -> "DenseTensor":
        return DenseTensor(self.data, tuple(mapping.get(l, l) for l in self.labels))

    def trace(self, label_a: str, label_b: str) -> "DenseTensor":
        """
        Contract two legs of the same tensor with each other.

        Args:
            label_a: First leg.
            label_b: Second leg, of the same dimension.

        Returns:
            DenseTensor: Tensor over the remaining labels.
        """
        ax_a, ax_b = self.axis(label_a), self.axis(label_b)
        if ax_a == ax_b:
            raise TensorNetworkError("Trace needs two different legs")
        if self.data.shape[ax_a] != self.data.shape[ax_b]:
            raise TensorNetworkError(
                f"Cannot trace {label_a!r} (dim {self.data.shape[ax_a]}) with "
                f"{label_b!r} (dim {self.data.shape[ax_b]})"
            )
        rest = tuple(l for l in self.labels if l not in (label_a, label_b))
        return DenseTensor(np.trace(self.data, axis1=ax_a, axis2=ax_b), rest)

    def allclose(self, other: "DenseTensor", atol: float = 1e-10) -> bool:
        """Elementwise comparison after aligning labels."""
        if sorted(self.labels) != sorted(other.labels):
            return False
        aligned = other.transpose(self.labels)
        return aligned.shape == self.shape and np.allclose(self.data, aligned.data, atol=atol, rtol=0)


def contract_pair(a: DenseTensor, b: DenseTensor,
                  shared_labels: Optional[Sequence[str]] = None) -> DenseTensor:
    """
    Sum over shared indices of two tensors.

    With no shared labels the result is the outer product.

    Args:
        a: Left tensor.
        b: Right tensor.
        shared_labels: Labels to contract; defaults to every label the two
            tensors have in common.

    Returns:
        DenseTensor: Tensor over a's remaining labels followed by b's.

    Raises:
        TensorNetworkError: On a missing label, a dimension mismatch, or a
            common label that is not being contracted.
    """
    if shared_labels is None:
        shared = [l for l in a.labels if l in b.labels]
    else:
        shared = list(shared_labels)
        for label in shared:
            if label not in a.labels or label not in b.labels:
                raise TensorNetworkError(f"Shared label {label!r} missing from one of the tensors")
        leftover = set(a.labels) & set(b.labels) - set(shared)
        if leftover:
            raise TensorNetworkError(f"Labels {sorted(leftover)} appear in both tensors but are not contracted")

    for label in shared:
        if a.dim(label) != b.dim(label):
            raise TensorNetworkError(
                f"Dimension mismatch on {label!r}: {a.dim(label)} vs {b.dim(label)}",
                details={"label": label},
            )

    axes_a = [a.axis(l) for l in shared]
    axes_b = [b.axis(l) for l in shared]
    data = np.tensordot(a.data, b.data, axes=(axes_a, axes_b))
    labels = tuple(l for l in a.labels if l not in shared) + tuple(l for l in b.labels if l not in shared)
    return DenseTensor(data, labels)
