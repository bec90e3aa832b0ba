"""
Labeled image datasets with a fixed train/test split.
"""

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from core.exceptions import TrainingError

SPLITS = ("train", "test", "all")


@dataclass
class LabeledDataset:
    """
    Pixel vectors with binary labels.

    Attributes:
        items: (pixels in [0, 1], label) pairs.
        train: Indices of the training split.
        test: Indices of the test split.
        names: Optional item names (e.g. file names).
    """
    items: List[Tuple[np.ndarray, int]]
    train: List[int] = field(default_factory=list)
    test: List[int] = field(default_factory=list)
    names: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.items = [(np.asarray(p, dtype=float).ravel(), int(l)) for p, l in self.items]
        for index, (pixels, label) in enumerate(self.items):
            if label not in (0, 1):
                raise TrainingError(f"Item {index} has label {label}; labels must be 0 or 1")
        for index in list(self.train) + list(self.test):
            if not 0 <= index < len(self.items):
                raise TrainingError(f"Split index {index} outside 0..{len(self.items) - 1}")

    def indices(self, split: str) -> List[int]:
        if split == "train":
            return list(self.train)
        if split == "test":
            return list(self.test)
        if split == "all":
            return list(range(len(self.items)))
        raise TrainingError(f"Unknown split {split!r}; choose from {SPLITS}")

    def pixels(self, split: str = "all") -> np.ndarray:
        rows = [self.items[i][0] for i in self.indices(split)]
        if not rows:
            raise TrainingError(f"Split {split!r} is empty")
        return np.stack(rows)

    def labels(self, split: str = "all") -> np.ndarray:
        return np.array([self.items[i][1] for i in self.indices(split)], dtype=int)

    @property
    def n_pixels(self) -> int:
        if not self.items:
            raise TrainingError("Dataset is empty")
        return self.items[0][0].size

    @classmethod
    def with_random_split(cls, items: Sequence[Tuple[np.ndarray, int]], seed: int = 0,
                          train_fraction: float = 0.5, names: Sequence[str] = ()) -> "LabeledDataset":
        """Shuffle indices with ``seed`` and split them into train and test."""
        order = np.random.default_rng(seed).permutation(len(items))
        n_train = int(round(train_fraction * len(items)))
        return cls(list(items), sorted(order[:n_train].tolist()), sorted(order[n_train:].tolist()), list(names))

    def __len__(self):
        return len(self.items)
