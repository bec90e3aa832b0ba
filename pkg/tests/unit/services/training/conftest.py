import numpy as np
import pytest


@pytest.fixture
def toy_dataset():
    """The four 2x2 bars-and-stripes images, all used for training and testing."""
    from services.training import LabeledDataset

    items = [
        (np.array([1.0, 0.0, 1.0, 0.0]), 0),
        (np.array([0.0, 1.0, 0.0, 1.0]), 0),
        (np.array([1.0, 1.0, 0.0, 0.0]), 1),
        (np.array([0.0, 0.0, 1.0, 1.0]), 1),
    ]
    return LabeledDataset(items, train=[0, 1, 2, 3], test=[0, 2])


@pytest.fixture
def small_layout():
    """4-qubit MPS with two layers per block."""
    from ansatz import AnsatzLayout

    return AnsatzLayout.mps(4, n_layers=2)
