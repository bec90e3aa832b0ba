"""
Training configuration, trained models and prediction.
"""

from dataclasses import asdict, dataclass, field
from typing import Any, ClassVar, Dict, List, Optional

import numpy as np

from ansatz import AnsatzLayout, ParamVector, build_circuit
from circuits import Circuit, Statevector, expval_z_batch, run_batch, sample_z
from core.data.validation import ChoiceValidator, RangeValidator, Validator, ValidatableMixin
from core.exceptions import TrainingError
from .dataset import LabeledDataset
from .encoding import PIXEL_ENCODINGS, encode_batch
from .objective import LOSS_FUNCTIONS, label_from_expval
from .spsa import SPSAConfig

INIT_STRATEGIES = ("uniform", "identity")


@dataclass
class TrainingConfig(ValidatableMixin):
    """
    Settings of one training run.

    Attributes:
        max_iters: SPSA iterations.
        seed: Seed of parameter initialization and perturbations.
        shots: Estimate <Z> from this many samples; exact when None.
        loss_kind: "logistic" or "cross_entropy".
        stop_at_accuracy: Stop once train accuracy reaches this value.
        bias: Constant amplitude appended to every encoded input.
        pixel_encoding: "intensity", "signed" (2p - 1) or "darkness" (1 - p).
        init: "uniform" draws angles in [0, 2*pi); "identity" draws them
            from N(0, init_scale), so every block starts near the identity.
        init_scale: Spread of the identity initialization.
        orient_readout: Pick the readout sign with the lower initial loss.
        readout_sign: +1, or -1 for a Rot(0, pi, 0) flip of the measured
            wire before readout.
        spsa: Gain settings.
    """
    max_iters: int = 400
    seed: int = 0
    shots: Optional[int] = None
    loss_kind: str = "logistic"
    stop_at_accuracy: Optional[float] = None
    bias: Optional[float] = None
    pixel_encoding: str = "signed"
    init: str = "uniform"
    init_scale: float = 0.01
    orient_readout: bool = False
    readout_sign: int = 1
    spsa: SPSAConfig = field(default_factory=SPSAConfig)

    _validators: ClassVar[List[Validator]] = [
        RangeValidator("max_iters", min_value=0, message="must be non-negative"),
        RangeValidator("shots", min_value=1, message="must be at least 1"),
        ChoiceValidator("loss_kind", choices=tuple(LOSS_FUNCTIONS), message="is not a known loss"),
        RangeValidator("stop_at_accuracy", min_value=0, max_value=1, message="must lie in [0, 1]"),
        ChoiceValidator("pixel_encoding", choices=tuple(PIXEL_ENCODINGS), message="is not a known encoding"),
        ChoiceValidator("init", choices=INIT_STRATEGIES, message="is not a known initialization"),
        RangeValidator("init_scale", min_value=0, message="must be non-negative"),
        ChoiceValidator("readout_sign", choices=(1, -1), message="must be 1 or -1"),
    ]

    def validate(self) -> List[str]:
        return super().validate() + [f"spsa.{e}" for e in self.spsa.validate()]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TrainingConfig":
        data = dict(data)
        spsa_data = data.pop("spsa", {}) or {}
        spsa = SPSAConfig(**{k: v for k, v in spsa_data.items() if k in SPSAConfig.__dataclass_fields__})
        known = {k: v for k, v in data.items() if k in cls.__dataclass_fields__}
        return cls(spsa=spsa, **known)


@dataclass
class TrainedModel:
    """
    Layout, parameters and training record of a classifier.

    Attributes:
        layout: Meta-ansatz layout.
        params: Trained parameters.
        history: One dict per iteration (iter, loss, best_loss, train_acc,
            test_acc).
        config: Training settings used, with the calibrated SPSA gain and
            the chosen readout sign.
        n_pixels: Input length the model was trained on.
        initial_loss: Training loss of the starting parameters.
    """
    layout: AnsatzLayout
    params: ParamVector
    history: List[Dict[str, Any]] = field(default_factory=list)
    config: TrainingConfig = field(default_factory=TrainingConfig)
    n_pixels: Optional[int] = None
    initial_loss: Optional[float] = None
    _circuit: Optional[Circuit] = field(default=None, init=False, repr=False, compare=False)

    @property
    def n_qubits(self) -> int:
        return self.layout.n_qubits

    @property
    def circuit(self) -> Circuit:
        if self._circuit is None:
            self._circuit = build_circuit(self.layout)
        return self._circuit

    def expvals(self, pixel_rows) -> np.ndarray:
        """Exact <Z> for each pixel vector, readout sign applied."""
        cfg = self.config
        return circuit_expvals(self.circuit, self.params.values, pixel_rows, cfg.bias,
                               cfg.pixel_encoding, cfg.readout_sign)


def circuit_expvals(circuit: Circuit, params, pixel_rows, bias: Optional[float] = None,
                    encoding: str = "intensity", readout_sign: int = 1) -> np.ndarray:
    """
    <Z> on the measured wire for a batch of encoded inputs.

    Cut markers are ignored; the circuit is simulated whole.
    """
    if circuit.measured_wire is None:
        raise TrainingError("Classifier circuit has no measured wire")
    states = encode_batch(pixel_rows, circuit.n_qubits, bias, encoding)
    out = run_batch(circuit, params, states, ignore_cuts=True)
    return readout_sign * expval_z_batch(out, circuit.measured_wire)


def sampled_expval(circuit: Circuit, params, pixels, shots: int, seed: int,
                   bias: Optional[float] = None, encoding: str = "intensity",
                   readout_sign: int = 1) -> float:
    """Mean of ``shots`` sampled Z outcomes on the measured wire."""
    states = encode_batch([pixels], circuit.n_qubits, bias, encoding)
    out = run_batch(circuit, params, states, ignore_cuts=True)
    outcomes = sample_z(Statevector(out[0]), circuit.measured_wire, shots, seed)
    return readout_sign * float(outcomes.mean())


def predict_from_circuit(circuit: Circuit, params, pixels, shots: Optional[int] = None,
                         seed: int = 0, bias: Optional[float] = None, encoding: str = "intensity",
                         readout_sign: int = 1) -> int:
    """
    Label of one input under a classifier circuit.

    Exact mode thresholds <Z>; shot mode takes the majority outcome. A zero
    value gives label 0.
    """
    if shots is None:
        value = float(circuit_expvals(circuit, params, [pixels], bias, encoding, readout_sign)[0])
    else:
        value = sampled_expval(circuit, params, pixels, shots, seed, bias, encoding, readout_sign)
    return label_from_expval(value)


def predict_label(model: TrainedModel, pixels, shots: Optional[int] = None, seed: int = 0) -> int:
    """
    Classify one image: 0 (bars) when <Z> >= 0, else 1 (stripes).

    Args:
        model: Trained model.
        pixels: Pixel vector.
        shots: Majority vote over this many samples; exact when None.
        seed: Sampling seed.

    Returns:
        int: Predicted label.
    """
    cfg = model.config
    return predict_from_circuit(model.circuit, model.params.values, pixels, shots, seed, cfg.bias,
                                cfg.pixel_encoding, cfg.readout_sign)


def evaluate_accuracy(model: TrainedModel, dataset: LabeledDataset, split: str = "test") -> float:
    """
    Fraction of a split classified correctly.

    Raises:
        TrainingError: If the split is empty.
    """
    if not dataset.indices(split):
        raise TrainingError(f"Cannot evaluate accuracy on empty split {split!r}")
    predictions = np.array([label_from_expval(e) for e in model.expvals(dataset.pixels(split))])
    return float(np.mean(predictions == dataset.labels(split)))
