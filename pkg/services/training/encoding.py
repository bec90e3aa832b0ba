"""
Amplitude encoding of pixel vectors.
"""

import math
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from circuits import Statevector
from core.exceptions import TrainingError

# Maps from [0, 1] pixel values to amplitudes, applied before the bias.
PIXEL_ENCODINGS: Dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "intensity": lambda p: p,
    "signed": lambda p: 2.0 * p - 1.0,
    "darkness": lambda p: 1.0 - p,
}


def qubits_for_pixels(n_pixels: int, bias: bool = False) -> int:
    """Smallest n with 2^n >= n_pixels (+1 slot for a bias amplitude)."""
    slots = n_pixels + (1 if bias else 0)
    if slots < 1:
        raise TrainingError("Cannot encode an empty pixel vector")
    return max(1, math.ceil(math.log2(slots)))


def transform_pixels(pixels, encoding: str = "intensity") -> np.ndarray:
    """
    Pixel values mapped to amplitudes before normalization.

    ``intensity`` keeps them, ``signed`` maps p to 2p - 1 and ``darkness``
    to 1 - p.

    Raises:
        TrainingError: On an unknown encoding.
    """
    try:
        transform = PIXEL_ENCODINGS[encoding]
    except KeyError:
        raise TrainingError(f"Unknown pixel encoding {encoding!r}; choose from {sorted(PIXEL_ENCODINGS)}")
    return transform(np.asarray(pixels, dtype=float).ravel())


def _amplitudes(pixels, n_qubits: int, bias: Optional[float], encoding: str = "intensity") -> np.ndarray:
    values = transform_pixels(pixels, encoding)
    if bias is not None:
        values = np.append(values, float(bias))
    dim = 2 ** n_qubits
    if values.size > dim:
        raise TrainingError(
            f"{values.size} amplitudes do not fit into {n_qubits} qubits ({dim} slots)",
            details={"amplitudes": int(values.size), "n_qubits": n_qubits},
        )
    norm = np.linalg.norm(values)
    if norm == 0.0:
        raise TrainingError("Cannot amplitude-encode an all-zero vector")
    padded = np.zeros(dim)
    padded[:values.size] = values / norm
    return padded


def amplitude_encode(pixels: Sequence[float], n_qubits: int,
                     bias: Optional[float] = None, encoding: str = "intensity") -> Statevector:
    """
    Load a pixel vector into the amplitudes of an n-qubit state.

    Args:
        pixels: Real values, row-major for images.
        n_qubits: Register width; 2^n must hold every value.
        bias: Optional constant appended after the pixels before
            normalization.
        encoding: Pixel transform, one of ``PIXEL_ENCODINGS``.

    Returns:
        Statevector: Normalized state, zero-padded to 2^n amplitudes.

    Raises:
        TrainingError: If the vector is all zero or too long.
    """
    return Statevector(_amplitudes(pixels, n_qubits, bias, encoding))


def encode_batch(pixel_rows, n_qubits: int, bias: Optional[float] = None,
                 encoding: str = "intensity") -> np.ndarray:
    """Encode several pixel vectors into a (B, 2^n) array for batched simulation."""
    return np.stack([_amplitudes(row, n_qubits, bias, encoding) for row in pixel_rows]).astype(complex)
