import numpy as np
import pytest


@pytest.fixture
def weld():
    """32x32 synthetic weld with one 4x4 dark blob, and its mask."""
    from services.detection import synthetic_weld_image

    return synthetic_weld_image(side=32, blob=4, seed=3)


@pytest.fixture
def small_config():
    """32/8/4 detector geometry."""
    from services.detection import DetectorConfig

    return DetectorConfig(coarse_side=32, window=8, fine_window=4)


@pytest.fixture
def dark_models():
    """Dark-pixel classifiers for the three stages of a 32/8/4 detector."""
    from services.detection import DarkPixelClassifier

    return DarkPixelClassifier(32 * 32), DarkPixelClassifier(8 * 8), DarkPixelClassifier(4 * 4)


@pytest.fixture
def clean_image():
    """Bright image without defects."""
    from services.detection import GrayImage

    return GrayImage(np.full((32, 32), 0.8))
