"""
Bars-and-stripes images.
"""

import itertools
from typing import Iterator, List, Tuple

import numpy as np

from core.exceptions import DetectionError
from services.training.dataset import LabeledDataset
from services.training.objective import BARS, STRIPES


def _patterns(n: int) -> Iterator[Tuple[str, np.ndarray]]:
    """Non-constant 0/1 lines of length n."""
    for pattern in itertools.product((0, 1), repeat=n):
        if len(set(pattern)) > 1:
            yield "".join(map(str, pattern)), np.array(pattern, dtype=float)


def bas_images(n: int) -> List[Tuple[np.ndarray, int, str]]:
    """
    Every non-uniform n x n bars or stripes image.

    Bars have constant columns, stripes constant rows; pixels are 0 or 1.
    Bars come first, each group ordered by its column (row) pattern.

    Returns:
        List of (n x n pixel array, label, name).

    Raises:
        DetectionError: If n < 2.
    """
    if n < 2:
        raise DetectionError(f"Bars and stripes need a side of at least 2, got {n}")
    bars = [(np.tile(line, (n, 1)), BARS, f"bars_{code}") for code, line in _patterns(n)]
    stripes = [(np.tile(line[:, None], (1, n)), STRIPES, f"stripes_{code}") for code, line in _patterns(n)]
    return bars + stripes


def generate_bas(n: int, seed: int = 0, train_fraction: float = 0.5) -> LabeledDataset:
    """
    Bars-and-stripes dataset with a seeded train/test split.

    Yields 2^(n+1) - 4 images, half bars (label 0) and half stripes
    (label 1).
    """
    images = bas_images(n)
    return LabeledDataset.with_random_split(
        [(pixels.ravel(), label) for pixels, label, _ in images],
        seed=seed,
        train_fraction=train_fraction,
        names=[name for _, _, name in images],
    )


def sample_bas(n: int, n_images: int = 28, seed: int = 0, train_fraction: float = 0.5) -> LabeledDataset:
    """
    Random subset of the n x n bars-and-stripes images.

    Draws ``n_images // 2`` distinct bar patterns and as many distinct
    stripe patterns without enumerating all 2^(n+1) - 4 images, so large
    sides such as 16 or 256 stay cheap.

    Raises:
        DetectionError: If n < 2 or fewer than two images are requested,
            or more than the set holds.
    """
    if n < 2:
        raise DetectionError(f"Bars and stripes need a side of at least 2, got {n}")
    per_class = n_images // 2
    if per_class < 1 or per_class > 2 ** n - 2:
        raise DetectionError(f"Cannot draw {n_images} distinct {n}x{n} bars-and-stripes images")

    rng = np.random.default_rng(seed)

    def draw_lines() -> List[Tuple[str, np.ndarray]]:
        seen = {}
        while len(seen) < per_class:
            line = rng.integers(0, 2, size=n)
            if line.min() != line.max():
                seen.setdefault("".join(map(str, line)), line.astype(float))
        return sorted(seen.items())

    items, names = [], []
    for code, line in draw_lines():
        items.append((np.tile(line, (n, 1)).ravel(), BARS))
        names.append(f"bars_{code}")
    for code, line in draw_lines():
        items.append((np.tile(line[:, None], (1, n)).ravel(), STRIPES))
        names.append(f"stripes_{code}")
    return LabeledDataset.with_random_split(items, seed=seed, train_fraction=train_fraction, names=names)
