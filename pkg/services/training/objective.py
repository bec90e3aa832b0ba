"""
Label rule, per-image probability of the correct label and losses.
"""

from typing import Callable, Dict, Sequence

import numpy as np

from core.exceptions import TrainingError

BARS = 0
STRIPES = 1

_EXPVAL_SLACK = 1e-9


def label_from_expval(expval: float) -> int:
    """0 when <Z> >= 0 (ties included), 1 when <Z> < 0."""
    return 0 if expval >= 0 else 1


def prob_correct(expval, label):
    """
    Probability of reading out the correct label.

    p = 1 - |(1 - <Z>)/2 - label|. Works elementwise on arrays.

    Args:
        expval: <Z> in [-1, 1].
        label: 0 or 1.

    Returns:
        Value(s) in [0, 1].

    Raises:
        TrainingError: On values outside the domain.
    """
    e = np.asarray(expval, dtype=float)
    l = np.asarray(label)
    if np.any(np.abs(e) > 1 + _EXPVAL_SLACK):
        raise TrainingError(f"Expectation values must lie in [-1, 1], got {e}")
    if not np.all((l == 0) | (l == 1)):
        raise TrainingError(f"Labels must be 0 or 1, got {l}")
    p = 1.0 - np.abs((1.0 - np.clip(e, -1.0, 1.0)) / 2.0 - l)
    return float(p) if p.ndim == 0 else p


def loss(p_values: Sequence[float]) -> float:
    """Sum of (1 + 10 exp(7 p_i))^-1 over the images."""
    p = np.asarray(p_values, dtype=float)
    return float(np.sum(1.0 / (1.0 + 10.0 * np.exp(7.0 * p))))


def cross_entropy_loss(p_values: Sequence[float], eps: float = 1e-12) -> float:
    """Sum of -log p_i, clipped away from zero."""
    p = np.clip(np.asarray(p_values, dtype=float), eps, 1.0)
    return float(-np.sum(np.log(p)))


LOSS_FUNCTIONS: Dict[str, Callable[[Sequence[float]], float]] = {
    "logistic": loss,
    "cross_entropy": cross_entropy_loss,
}


def get_loss(kind: str) -> Callable[[Sequence[float]], float]:
    try:
        return LOSS_FUNCTIONS[kind]
    except KeyError:
        raise TrainingError(f"Unknown loss {kind!r}; choose from {sorted(LOSS_FUNCTIONS)}")
