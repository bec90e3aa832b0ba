"""
Interface definitions for window classifiers.
"""

from abc import ABC, abstractmethod

import numpy as np


class WindowClassifier(ABC):
    """
    Abstract interface for binary image-window classifiers.

    The detection pipeline only needs to know how many pixels a classifier
    accepts and which label it assigns; trained circuits and simple
    threshold rules both implement it.
    """

    @property
    @abstractmethod
    def n_pixels(self) -> int:
        """
        Number of pixels of the square window this classifier accepts.
        """
        pass

    @abstractmethod
    def predict(self, pixels: np.ndarray) -> int:
        """
        Classify a window.

        Args:
            pixels: Row-major pixel values in [0, 1].

        Returns:
            int: 1 for "defect", 0 for "no defect".
        """
        pass

    def predict_many(self, rows) -> np.ndarray:
        """
        Classify several windows; one label per row.

        Implementations may override this with a batched evaluation.
        """
        return np.array([self.predict(np.asarray(row, dtype=float)) for row in rows], dtype=int)
