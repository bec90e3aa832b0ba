import json

import numpy as np
import pytest


class TestCheckpoint:
    """Test suite for model checkpoints and metrics files."""

    @pytest.fixture
    def model(self, small_layout, toy_dataset):
        """Briefly trained model."""
        from services.training import TrainingConfig, train

        return train(small_layout, toy_dataset, TrainingConfig(max_iters=2, seed=4))

    def test_save_and_load(self, model, tmp_path):
        """A saved model reloads with the same layout and angles."""
        from services.training import load_checkpoint, save_checkpoint

        path = save_checkpoint(model, tmp_path / "models" / "mps.json")
        loaded = load_checkpoint(path)
        assert loaded.layout == model.layout
        assert np.allclose(loaded.params.values, model.params.values)
        assert loaded.config.seed == 4
        assert len(loaded.history) == 2
        assert loaded.n_pixels == 4

    def test_document_layout(self, model):
        """Checkpoints describe the layout with n, n_V, b and L."""
        from services.training import FORMAT_VERSION, model_to_dict

        document = model_to_dict(model, include_history=False)
        assert document["format_version"] == FORMAT_VERSION
        assert document["layout"]["kind"] == "MPS"
        assert (document["layout"]["n"], document["layout"]["n_V"]) == (4, 1)
        assert (document["layout"]["b"], document["layout"]["L"]) == (2, 2)
        assert "history" not in document

    def test_schema_violation(self, model):
        """Documents that break the schema raise FormatError."""
        from core.exceptions import FormatError
        from services.training import model_from_dict, model_to_dict

        document = model_to_dict(model)
        document["layout"]["kind"] = "MERA"
        with pytest.raises(FormatError):
            model_from_dict(document)

    def test_invalid_json(self, tmp_path):
        """Broken JSON reports its line."""
        from core.exceptions import FormatError
        from services.training import load_checkpoint

        path = tmp_path / "broken.json"
        path.write_text('{\n  "format_version": 1,\n  oops\n}')
        with pytest.raises(FormatError) as excinfo:
            load_checkpoint(path)
        assert excinfo.value.line == 3

    def test_missing_file(self, tmp_path):
        """Missing checkpoints raise FileError."""
        from core.exceptions import FileError
        from services.training import load_checkpoint

        with pytest.raises(FileError):
            load_checkpoint(tmp_path / "absent.json")

    def test_metrics_writer(self, tmp_path):
        """One JSON line per record with iter, loss and accuracies."""
        from services.training import MetricsWriter

        path = tmp_path / "metrics.jsonl"
        with MetricsWriter(path) as writer:
            writer({"iter": 0, "loss": 0.5, "best_loss": 0.5, "train_acc": 0.25, "test_acc": None})
            writer({"iter": 1, "loss": 0.4, "best_loss": 0.4, "train_acc": 0.5, "test_acc": 1.0})
        lines = [json.loads(line) for line in path.read_text().splitlines()]
        assert writer.lines_written == 2
        assert lines[1] == {"iter": 1, "loss": 0.4, "train_acc": 0.5, "test_acc": 1.0}

    def test_metrics_writer_without_path(self):
        """Without a path the writer does nothing."""
        from services.training import MetricsWriter

        with MetricsWriter(None) as writer:
            writer({"iter": 0})
        assert writer.lines_written == 0

    def test_initial_loss_and_sign_survive_reload(self, model, tmp_path):
        """Checkpoints keep the starting loss and the readout settings."""
        from dataclasses import replace

        from services.training import load_checkpoint, save_checkpoint

        model.config = replace(model.config, readout_sign=-1, pixel_encoding="darkness")
        loaded = load_checkpoint(save_checkpoint(model, tmp_path / "m.json"))
        assert loaded.initial_loss == pytest.approx(model.initial_loss)
        assert loaded.config.readout_sign == -1
        assert loaded.config.pixel_encoding == "darkness"
