import numpy as np
import pytest


class TestClassifiers:
    """Test suite for window classifiers."""

    def test_dark_pixel_rule(self):
        """Windows with enough dark pixels are defects."""
        from services.detection import DarkPixelClassifier

        classifier = DarkPixelClassifier(4, black_threshold=0.25, min_dark=2)
        assert classifier.n_pixels == 4
        assert classifier.predict(np.array([0.1, 0.1, 0.9, 0.9])) == 1
        assert classifier.predict(np.array([0.1, 0.9, 0.9, 0.9])) == 0
        assert classifier.predict_many([np.zeros(4), np.ones(4)]).tolist() == [1, 0]

    def test_dark_pixel_checks(self):
        """min_dark must be positive."""
        from core.exceptions import DetectionError
        from services.detection import DarkPixelClassifier

        with pytest.raises(DetectionError):
            DarkPixelClassifier(4, min_dark=0)

    def test_model_classifier(self):
        """Batched and single predictions agree."""
        from ansatz import AnsatzLayout, random_params
        from services.detection import ModelClassifier
        from services.training import TrainedModel

        layout = AnsatzLayout.mps(4)
        model = TrainedModel(layout, random_params(layout, seed=6), n_pixels=16)
        classifier = ModelClassifier(model)
        rows = np.random.default_rng(0).random((5, 16))
        batch = classifier.predict_many(rows)
        assert classifier.n_pixels == 16
        assert batch.tolist() == [classifier.predict(row) for row in rows]
        assert set(batch.tolist()) <= {0, 1}

    def test_black_windows_need_bias(self):
        """All-black windows only encode with a bias amplitude."""
        from ansatz import AnsatzLayout, ParamVector
        from core.exceptions import DetectionError
        from services.detection import ModelClassifier
        from services.training import TrainedModel, TrainingConfig

        plain = TrainedModel(AnsatzLayout.mps(4), ParamVector.for_layout(AnsatzLayout.mps(4)), n_pixels=16)
        with pytest.raises(DetectionError):
            ModelClassifier(plain).predict(np.zeros(16))

        layout = AnsatzLayout.mps(5, block_qubits=3, n_bond_qubits=1)
        biased = TrainedModel(layout, ParamVector.for_layout(layout), config=TrainingConfig(bias=1.0), n_pixels=16)
        assert ModelClassifier(biased).predict(np.zeros(16)) in (0, 1)
