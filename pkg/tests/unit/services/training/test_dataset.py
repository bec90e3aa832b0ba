import numpy as np
import pytest


class TestLabeledDataset:
    """Test suite for LabeledDataset."""

    def test_splits(self, toy_dataset):
        """Splits select rows and labels by index."""
        assert toy_dataset.indices("test") == [0, 2]
        assert toy_dataset.pixels("test").shape == (2, 4)
        assert toy_dataset.labels("all").tolist() == [0, 0, 1, 1]
        assert toy_dataset.n_pixels == 4
        assert len(toy_dataset) == 4

    def test_rejects_bad_labels(self):
        """Labels other than 0 and 1 raise TrainingError."""
        from core.exceptions import TrainingError
        from services.training import LabeledDataset

        with pytest.raises(TrainingError):
            LabeledDataset([(np.ones(4), 2)])

    def test_rejects_bad_indices(self):
        """Split indices must point at items."""
        from core.exceptions import TrainingError
        from services.training import LabeledDataset

        with pytest.raises(TrainingError):
            LabeledDataset([(np.ones(4), 0)], train=[1])

    def test_unknown_and_empty_splits(self):
        """Unknown names and empty splits are errors."""
        from core.exceptions import TrainingError
        from services.training import LabeledDataset

        dataset = LabeledDataset([(np.ones(4), 0)], train=[0])
        with pytest.raises(TrainingError):
            dataset.indices("validation")
        with pytest.raises(TrainingError):
            dataset.pixels("test")

    def test_random_split(self):
        """Random splits are seeded and partition the items."""
        from services.training import LabeledDataset

        items = [(np.full(4, i + 1.0), i % 2) for i in range(10)]
        first = LabeledDataset.with_random_split(items, seed=3, train_fraction=0.7)
        second = LabeledDataset.with_random_split(items, seed=3, train_fraction=0.7)
        assert first.train == second.train
        assert len(first.train) == 7
        assert sorted(first.train + first.test) == list(range(10))
