"""
Synthetic weld images with planted dark blobs and labeled window sets.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.exceptions import DetectionError
from services.training.dataset import LabeledDataset
from .classifiers import DarkPixelClassifier
from .images import GrayImage, sliding_windows

logger = logging.getLogger(__name__)


def synthetic_weld_image(side: int = 256, blob: int = 8, seed: int = 0, n_blobs: int = 1,
                         background: float = 0.8, noise: float = 0.02,
                         blob_level: float = 0.05) -> Tuple[GrayImage, np.ndarray]:
    """
    Bright noisy background with square dark blobs at random positions.

    Args:
        side: Image side.
        blob: Blob side; 0 gives a defect-free image.
        seed: Random seed.
        n_blobs: Number of blobs.
        background: Mean background level.
        noise: Standard deviation of the background noise.
        blob_level: Pixel value inside blobs.

    Returns:
        Tuple[GrayImage, np.ndarray]: The image and the boolean blob mask.
    """
    if blob > side:
        raise DetectionError(f"Blob of side {blob} does not fit a {side}x{side} image")
    rng = np.random.default_rng(seed)
    pixels = np.clip(background + noise * rng.standard_normal((side, side)), 0.0, 1.0)
    mask = np.zeros((side, side), dtype=bool)
    if blob > 0:
        for _ in range(n_blobs):
            x, y = rng.integers(0, side - blob + 1, size=2)
            mask[y:y + blob, x:x + blob] = True
    pixels[mask] = blob_level
    return GrayImage(pixels), mask


def build_window_dataset(images: Sequence[GrayImage], window: int, stride: Optional[int] = None,
                         black_threshold: float = 0.25, min_dark: int = 1, seed: int = 0,
                         train_fraction: float = 0.5, balance: bool = True) -> LabeledDataset:
    """
    Cut images into windows labeled 1 when they hold dark pixels.

    Args:
        images: Source images.
        window: Window side; the image side gives one item per image.
        stride: Window stride; defaults to ``window``.
        black_threshold: Pixel value below which a pixel counts as dark.
        min_dark: Dark pixels needed for label 1.
        seed: Seed of class balancing and the train/test split.
        train_fraction: Share of items in the train split.
        balance: Subsample the larger class to the size of the smaller.

    Returns:
        LabeledDataset: Window pixel vectors with labels.
    """
    labeler = DarkPixelClassifier(window * window, black_threshold, min_dark)
    items: List[Tuple[np.ndarray, int]] = []
    names: List[str] = []
    for index, image in enumerate(images):
        for x, y, patch in sliding_windows(image, window, stride):
            vector = patch.vector()
            items.append((vector, labeler.predict(vector)))
            names.append(f"img{index}_x{x}_y{y}")

    rng = np.random.default_rng(seed)
    if balance:
        positives = [i for i, (_, label) in enumerate(items) if label == 1]
        negatives = [i for i, (_, label) in enumerate(items) if label == 0]
        keep = min(len(positives), len(negatives))
        if keep == 0:
            raise DetectionError(f"Windows of side {window} contain only one class; cannot balance")
        chosen = sorted(rng.choice(positives, keep, replace=False).tolist()
                        + rng.choice(negatives, keep, replace=False).tolist())
        items = [items[i] for i in chosen]
        names = [names[i] for i in chosen]

    logger.debug("Built %d windows of side %d from %d images", len(items), window, len(images))
    return LabeledDataset.with_random_split(items, seed=seed, train_fraction=train_fraction, names=names)
