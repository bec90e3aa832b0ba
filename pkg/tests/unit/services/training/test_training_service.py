import json

import pytest


class TestTrainingService:
    """Test suite for TrainingService."""

    @pytest.fixture
    def service(self):
        """Service with a short iteration budget."""
        from services.training import TrainingService

        return TrainingService({"training": {"max_iters": 3, "seed": 5, "spsa": {"a": 0.1}}})

    def test_config_from_settings(self, service):
        """Training settings come from the training section."""
        cfg = service.training_config()
        assert cfg.max_iters == 3
        assert cfg.seed == 5
        assert cfg.spsa.a == pytest.approx(0.1)
        assert cfg.spsa.alpha == pytest.approx(0.602)
        assert cfg.loss_kind == "logistic"

    def test_overrides(self, service):
        """Overrides win and None overrides are ignored."""
        cfg = service.training_config(max_iters=7, seed=None, loss_kind="cross_entropy")
        assert cfg.max_iters == 7
        assert cfg.seed == 5
        assert cfg.loss_kind == "cross_entropy"

    def test_fit_writes_metrics(self, service, small_layout, toy_dataset, tmp_path):
        """fit streams one metrics line per iteration."""
        calls = []
        path = tmp_path / "metrics.jsonl"
        model = service.fit(small_layout, toy_dataset, metrics_path=path, callback=calls.append)
        assert len(model.history) == 3
        assert len(calls) == 3
        lines = path.read_text().splitlines()
        assert [json.loads(line)["iter"] for line in lines] == [0, 1, 2]

    def test_summary(self, service, small_layout, toy_dataset):
        """summarize reports iterations, loss and accuracies."""
        model = service.fit(small_layout, toy_dataset)
        summary = service.summarize(model, toy_dataset)
        assert summary["iterations"] == 3
        assert summary["final_loss"] == model.history[-1]["loss"]
        assert 0.0 <= summary["train_acc"] <= 1.0
        assert 0.0 <= summary["test_acc"] <= 1.0

    def test_save_and_load(self, service, small_layout, toy_dataset, tmp_path):
        """Models round-trip through the service."""
        model = service.fit(small_layout, toy_dataset)
        loaded = service.load(service.save(model, tmp_path / "model.json"))
        assert loaded.layout == model.layout

    def test_logs_training(self, service, small_layout, toy_dataset, caplog, monkeypatch):
        """fit logs its start and its summary."""
        import logging

        monkeypatch.setattr(service.logger, "propagate", True)
        with caplog.at_level(logging.INFO, logger=service.logger.name):
            service.fit(small_layout, toy_dataset)
        assert any("Finished after 3 iterations" in r.getMessage() for r in caplog.records)
