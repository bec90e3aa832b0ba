"""
Simultaneous perturbation stochastic approximation (SPSA).
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, ClassVar, List, Optional, Tuple

import numpy as np

from ansatz import ParamVector
from core.data.validation import RangeValidator, Validator, ValidatableMixin

logger = logging.getLogger(__name__)

FALLBACK_GAIN = 0.2


@dataclass
class SPSAConfig(ValidatableMixin):
    """
    Gain-sequence settings.

    a_k = a / (k + 1 + A)^alpha and c_k = c / (k + 1)^gamma. When ``A``
    is None it resolves to 10% of the iteration budget. When ``a`` is None
    the trainer calibrates it so that the first step moves each parameter
    by about ``target_step`` radians.
    """
    a: Optional[float] = None
    c: float = 0.2
    A: Optional[float] = None
    alpha: float = 0.602
    gamma: float = 0.101
    target_step: float = math.pi / 5
    calibration_samples: int = 20

    _validators: ClassVar[List[Validator]] = [
        RangeValidator("a", min_value=0, exclusive_min=True, message="must be positive"),
        RangeValidator("c", min_value=0, exclusive_min=True, message="must be positive"),
        RangeValidator("A", min_value=0, message="must be non-negative"),
        RangeValidator("alpha", min_value=0, exclusive_min=True, message="must be positive"),
        RangeValidator("gamma", min_value=0, exclusive_min=True, message="must be positive"),
        RangeValidator("target_step", min_value=0, exclusive_min=True, message="must be positive"),
        RangeValidator("calibration_samples", min_value=1, message="must be at least 1"),
    ]

    def resolved_A(self, max_iters: Optional[int] = None) -> float:
        if self.A is not None:
            return float(self.A)
        return 0.1 * max_iters if max_iters else 0.0

    def resolved_a(self) -> float:
        return FALLBACK_GAIN if self.a is None else float(self.a)


def spsa_gains(k: int, cfg: SPSAConfig, max_iters: Optional[int] = None) -> Tuple[float, float]:
    """(a_k, c_k) for iteration ``k`` (zero-based)."""
    a_k = cfg.resolved_a() / (k + 1 + cfg.resolved_A(max_iters)) ** cfg.alpha
    c_k = cfg.c / (k + 1) ** cfg.gamma
    return a_k, c_k


def calibrate_gain(objective: Callable[[np.ndarray], float], theta: np.ndarray, cfg: SPSAConfig,
                   rng: np.random.Generator, max_iters: Optional[int] = None) -> float:
    """
    Gain ``a`` whose first update moves each parameter by ``target_step``.

    Averages |f(theta + c*delta) - f(theta - c*delta)| over
    ``calibration_samples`` Rademacher draws; the first step magnitude is
    a_0 * mean / (2c), solved for a. A flat objective gives the fallback
    gain 0.2.
    """
    theta = np.asarray(theta, dtype=float)
    diffs = []
    for _ in range(cfg.calibration_samples):
        delta = rng.choice(np.array([-1.0, 1.0]), size=theta.shape)
        diffs.append(abs(objective(theta + cfg.c * delta) - objective(theta - cfg.c * delta)))
    magnitude = float(np.mean(diffs))
    if magnitude == 0.0:
        logger.warning("Objective is flat around the start point; using gain a=%s", FALLBACK_GAIN)
        return FALLBACK_GAIN
    a = cfg.target_step * 2.0 * cfg.c / magnitude * (1.0 + cfg.resolved_A(max_iters)) ** cfg.alpha
    logger.debug("Calibrated SPSA gain a=%.4g from mean difference %.4g", a, magnitude)
    return a


def spsa_step(params, objective: Callable[[np.ndarray], float], k: int, cfg: SPSAConfig,
              rng: np.random.Generator, max_iters: Optional[int] = None):
    """
    One SPSA update with exactly two objective evaluations.

    Args:
        params: ParamVector or flat array.
        objective: Function of a flat array.
        k: Iteration index, starting at 0.
        cfg: Gain settings; an unset ``a`` uses the fallback 0.2.
        rng: Generator for the Rademacher perturbation.
        max_iters: Budget used to resolve ``cfg.A`` when it is None.

    Returns:
        Updated parameters of the same type as ``params``.
    """
    theta = params.values if isinstance(params, ParamVector) else np.asarray(params, dtype=float)
    a_k, c_k = spsa_gains(k, cfg, max_iters)
    delta = rng.choice(np.array([-1.0, 1.0]), size=theta.shape)

    f_plus = objective(theta + c_k * delta)
    f_minus = objective(theta - c_k * delta)
    gradient = (f_plus - f_minus) / (2.0 * c_k) / delta
    updated = theta - a_k * gradient

    if isinstance(params, ParamVector):
        return ParamVector(updated, params.n_weight_sets, params.block)
    return updated
