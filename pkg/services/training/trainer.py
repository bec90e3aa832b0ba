"""
SPSA training loop for meta-ansatz classifiers.
"""

import logging
from dataclasses import replace
from typing import Callable, Dict, Optional

import numpy as np

from ansatz import AnsatzLayout, ParamVector, build_circuit
from circuits import expval_z_batch, run_batch
from core.exceptions import TrainingError
from .dataset import LabeledDataset
from .encoding import encode_batch, qubits_for_pixels
from .model import TrainedModel, TrainingConfig
from .objective import get_loss, label_from_expval, prob_correct
from .spsa import calibrate_gain, spsa_step

logger = logging.getLogger(__name__)

IterationCallback = Callable[[Dict[str, float]], None]


def _accuracy(expvals: np.ndarray, labels: np.ndarray) -> float:
    predictions = np.array([label_from_expval(e) for e in expvals])
    return float(np.mean(predictions == labels))


def initial_angles(layout: AnsatzLayout, cfg: TrainingConfig, rng: np.random.Generator) -> np.ndarray:
    """Starting parameters drawn from ``rng`` by ``cfg.init``."""
    if cfg.init == "identity":
        return rng.normal(0.0, cfg.init_scale, layout.n_params)
    return rng.uniform(0.0, 2.0 * np.pi, layout.n_params)


def train(layout: AnsatzLayout, dataset: LabeledDataset, cfg: Optional[TrainingConfig] = None,
          callback: Optional[IterationCallback] = None,
          initial_params: Optional[np.ndarray] = None) -> TrainedModel:
    """
    Fit a classifier with SPSA on the training split.

    Every iteration takes one SPSA step on loss(prob_correct(<Z>)) and then
    records the exact loss and accuracies of the new parameters. The model
    keeps the parameters with the lowest recorded loss, or the ones that
    reached ``stop_at_accuracy`` when training stops early.

    Before the first step the readout sign is chosen when
    ``orient_readout`` is set, and an unset SPSA gain ``a`` is calibrated
    at the starting point. The returned config holds both.

    Args:
        layout: Meta-ansatz to train.
        dataset: Labeled images; the train split must be non-empty.
        cfg: Training settings.
        callback: Called with each history record.
        initial_params: Starting angles; drawn by ``cfg.init`` from the
            seed when None.

    Returns:
        TrainedModel: Best parameters and the per-iteration history.

    Raises:
        ValidationError: On invalid settings.
        TrainingError: On an empty train split or inputs too long for the
            layout.
    """
    cfg = cfg or TrainingConfig()
    cfg.validate_or_raise()
    if not dataset.train:
        raise TrainingError("Training split is empty")

    needed = qubits_for_pixels(dataset.n_pixels, bias=cfg.bias is not None)
    if needed > layout.n_qubits:
        raise TrainingError(
            f"{dataset.n_pixels} pixels need {needed} qubits, layout has {layout.n_qubits}",
            details={"needed": needed, "available": layout.n_qubits},
        )

    rng = np.random.default_rng(cfg.seed)
    if initial_params is None:
        theta = initial_angles(layout, cfg, rng)
    else:
        theta = ParamVector.for_layout(layout, initial_params).values.copy()

    circuit = build_circuit(layout)
    wire = circuit.measured_wire
    loss_fn = get_loss(cfg.loss_kind)

    def encode(split):
        return encode_batch(dataset.pixels(split), layout.n_qubits, cfg.bias, cfg.pixel_encoding)

    train_states = encode("train")
    train_labels = dataset.labels("train")
    has_test = bool(dataset.test)
    if has_test:
        test_states = encode("test")
        test_labels = dataset.labels("test")

    def raw_expvals(values, states):
        return expval_z_batch(run_batch(circuit, values, states, ignore_cuts=True), wire)

    def train_loss(e) -> float:
        return loss_fn(prob_correct(e, train_labels))

    if cfg.orient_readout:
        start = raw_expvals(theta, train_states)
        cfg = replace(cfg, readout_sign=-1 if train_loss(-start) < train_loss(start) else 1)
        logger.debug("Readout sign %+d", cfg.readout_sign)
    sign = cfg.readout_sign

    def exact_expvals(values, states):
        return sign * raw_expvals(values, states)

    def objective(values) -> float:
        e = exact_expvals(values, train_states)
        if cfg.shots is not None:
            ones = rng.binomial(cfg.shots, np.clip((1.0 - e) / 2.0, 0.0, 1.0))
            e = 1.0 - 2.0 * ones / cfg.shots
        return train_loss(e)

    if cfg.spsa.a is None and cfg.max_iters > 0:
        gain = calibrate_gain(objective, theta, cfg.spsa, rng, cfg.max_iters)
        cfg = replace(cfg, spsa=replace(cfg.spsa, a=gain))

    best_theta = theta.copy()
    initial_loss = best_loss = train_loss(exact_expvals(theta, train_states))
    history = []
    logger.debug("Training %s for up to %d iterations, initial loss %.6f", layout, cfg.max_iters, best_loss)

    for k in range(cfg.max_iters):
        theta = spsa_step(theta, objective, k, cfg.spsa, rng, cfg.max_iters)

        e_train = exact_expvals(theta, train_states)
        current = train_loss(e_train)
        if current < best_loss:
            best_loss, best_theta = current, theta.copy()

        record = {
            "iter": k,
            "loss": current,
            "best_loss": best_loss,
            "train_acc": _accuracy(e_train, train_labels),
            "test_acc": _accuracy(exact_expvals(theta, test_states), test_labels) if has_test else None,
        }
        history.append(record)
        if callback is not None:
            callback(record)

        if cfg.stop_at_accuracy is not None and record["train_acc"] >= cfg.stop_at_accuracy:
            logger.debug("Stopping at iteration %d with train accuracy %.3f", k, record["train_acc"])
            best_theta = theta.copy()
            break

    return TrainedModel(
        layout=layout,
        params=ParamVector.for_layout(layout, best_theta),
        history=history,
        config=cfg,
        n_pixels=dataset.n_pixels,
        initial_loss=initial_loss,
    )
