"""
Window classifiers used by the detection pipeline.
"""

from typing import Optional

import numpy as np

from core.exceptions import DetectionError, TrainingError
from core.interfaces.classifier import WindowClassifier
from services.training.model import TrainedModel, predict_label
from services.training.objective import label_from_expval


class ModelClassifier(WindowClassifier):
    """
    Adapts a trained circuit classifier to the window interface.

    Label 1 means "defect". With ``shots`` set each window is decided by a
    sampled majority; otherwise the exact <Z> is thresholded and windows
    are evaluated as one batch.
    """

    def __init__(self, model: TrainedModel, shots: Optional[int] = None, seed: int = 0):
        self.model = model
        self.shots = shots
        self.seed = seed

    @property
    def n_pixels(self) -> int:
        if self.model.n_pixels is not None:
            return self.model.n_pixels
        return 2 ** self.model.n_qubits - (1 if self.model.config.bias is not None else 0)

    def predict(self, pixels: np.ndarray) -> int:
        return int(self.predict_many([pixels])[0])

    def predict_many(self, rows) -> np.ndarray:
        rows = [np.asarray(row, dtype=float).ravel() for row in rows]
        try:
            if self.shots is None:
                return np.array([label_from_expval(e) for e in self.model.expvals(rows)], dtype=int)
            return np.array([predict_label(self.model, row, self.shots, self.seed) for row in rows], dtype=int)
        except TrainingError as e:
            raise DetectionError(
                f"Window could not be encoded: {e.message}; "
                "train with a bias amplitude to classify blank windows",
                details=e.details,
            )

    def __repr__(self):
        return f"ModelClassifier({self.model.layout}, n_pixels={self.n_pixels})"


class DarkPixelClassifier(WindowClassifier):
    """
    Flags windows holding at least ``min_dark`` pixels below a threshold.

    Labels the synthetic training windows and serves as a reference
    classifier for the pipeline.
    """

    def __init__(self, n_pixels: int, black_threshold: float = 0.25, min_dark: int = 1):
        if min_dark < 1:
            raise DetectionError(f"min_dark must be at least 1, got {min_dark}")
        self._n_pixels = n_pixels
        self.black_threshold = black_threshold
        self.min_dark = min_dark

    @property
    def n_pixels(self) -> int:
        return self._n_pixels

    def predict(self, pixels: np.ndarray) -> int:
        return int(np.count_nonzero(np.asarray(pixels) < self.black_threshold) >= self.min_dark)
