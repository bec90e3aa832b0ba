import math

import numpy as np
import pytest


class TestObjective:
    """Test suite for the label rule and loss functions."""

    def test_label_rule(self):
        """Non-negative values are bars, negative values stripes."""
        from services.training import BARS, STRIPES, label_from_expval

        assert label_from_expval(0.3) == BARS
        assert label_from_expval(0.0) == BARS
        assert label_from_expval(-1e-6) == STRIPES

    def test_prob_correct(self):
        """p = 1 - |(1 - e)/2 - label|."""
        from services.training import prob_correct

        assert prob_correct(1.0, 0) == pytest.approx(1.0)
        assert prob_correct(1.0, 1) == pytest.approx(0.0)
        assert prob_correct(-1.0, 1) == pytest.approx(1.0)
        assert prob_correct(0.0, 0) == pytest.approx(0.5)
        assert np.allclose(prob_correct(np.array([0.5, -0.5]), np.array([0, 1])), [0.75, 0.75])

    def test_prob_correct_domain(self):
        """Out-of-range values and labels raise TrainingError."""
        from core.exceptions import TrainingError
        from services.training import prob_correct

        with pytest.raises(TrainingError):
            prob_correct(1.5, 0)
        with pytest.raises(TrainingError):
            prob_correct(0.0, 2)

    def test_loss_values(self):
        """The loss sums (1 + 10 e^(7p))^-1 and decreases with p."""
        from services.training import loss

        assert loss([0.0]) == pytest.approx(1.0 / 11.0)
        assert loss([1.0, 1.0]) == pytest.approx(2.0 / (1.0 + 10.0 * math.exp(7.0)))
        assert loss([0.9]) < loss([0.5]) < loss([0.1])

    def test_cross_entropy(self):
        """Cross entropy is -sum log p and finite at p = 0."""
        from services.training import cross_entropy_loss

        assert cross_entropy_loss([1.0]) == pytest.approx(0.0)
        assert cross_entropy_loss([0.5, 0.5]) == pytest.approx(2.0 * math.log(2.0))
        assert math.isfinite(cross_entropy_loss([0.0]))

    def test_get_loss(self):
        """Loss kinds resolve by name."""
        from core.exceptions import TrainingError
        from services.training import cross_entropy_loss, get_loss, loss

        assert get_loss("logistic") is loss
        assert get_loss("cross_entropy") is cross_entropy_loss
        with pytest.raises(TrainingError):
            get_loss("hinge")
