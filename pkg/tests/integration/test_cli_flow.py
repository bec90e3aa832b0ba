import json

import pytest


@pytest.fixture
def config_dir(tmp_path, monkeypatch):
    """Config directory shrinking the detector to a 32/8/4 geometry."""
    directory = tmp_path / "config"
    directory.mkdir()
    (directory / "local.json").write_text(json.dumps({
        "detection": {"coarse_side": 32, "window": 8, "fine_window": 4, "max_workers": 1},
    }))
    monkeypatch.setenv("TNQC_CONFIG_DIR", str(directory))
    monkeypatch.delenv("TNQC_ENV", raising=False)
    return directory


def run_json(capsys, argv):
    from cli import main

    code = main(["--json"] + argv)
    captured = capsys.readouterr()
    return code, (json.loads(captured.out) if code == 0 else None), captured.err


class TestCliFlow:
    """Chained tnqc commands sharing files."""

    def test_generate_then_train(self, capsys, tmp_path, monkeypatch):
        """A generated BAS directory feeds the train command."""
        monkeypatch.delenv("TNQC_CONFIG_DIR", raising=False)
        data = tmp_path / "bas"
        code, document, _ = run_json(capsys, ["bas-gen", "--size", "2", "--out", str(data), "--ascii"])
        assert code == 0

        out = tmp_path / "model.json"
        code, document, _ = run_json(capsys, ["train", "--layout", "mps", "--n", "4", "--data", str(data),
                                              "--iters", "2", "--metrics", str(tmp_path / "run.jsonl"),
                                              "--out", str(out)])
        assert code == 0
        assert document["iterations"] == 2
        assert document["metrics"] == str(tmp_path / "run.jsonl")
        assert json.loads(out.read_text())["n_pixels"] == 4

    def test_detect_with_checkpoints(self, capsys, tmp_path, config_dir):
        """detect reads the geometry from the config directory and writes both outputs."""
        from ansatz import AnsatzLayout, random_params
        from services.detection import save_pgm, synthetic_weld_image
        from services.training import TrainedModel, save_checkpoint

        image_path = save_pgm(synthetic_weld_image(side=32, blob=4, seed=2)[0], tmp_path / "weld.pgm")
        models = []
        for name, n_qubits, n_pixels in (("coarse", 10, 1024), ("window", 6, 64), ("fine", 4, 16)):
            layout = AnsatzLayout.mps(n_qubits)
            model = TrainedModel(layout, random_params(layout, seed=1), n_pixels=n_pixels)
            models.append(str(save_checkpoint(model, tmp_path / f"{name}.json")))

        report, highlight = tmp_path / "out" / "report.json", tmp_path / "out" / "highlight.ppm"
        code, document, _ = run_json(capsys, ["detect", "--image", str(image_path), "--models", ",".join(models),
                                              "--out", f"{report},{highlight}"])
        assert code == 0
        assert document["stage1"] in ("defect", "no-defect")
        assert document["image"] == {"width": 32, "height": 32}
        assert json.loads(report.read_text()) == document
        assert highlight.read_bytes().startswith(b"P6")

    def test_detect_stage_mismatch(self, capsys, tmp_path, config_dir):
        """Checkpoints sized for another geometry are reported as usage errors."""
        from ansatz import AnsatzLayout, random_params
        from services.detection import save_pgm, synthetic_weld_image
        from services.training import TrainedModel, save_checkpoint

        image_path = save_pgm(synthetic_weld_image(side=32, blob=4, seed=2)[0], tmp_path / "weld.pgm")
        layout = AnsatzLayout.mps(4)
        path = str(save_checkpoint(TrainedModel(layout, random_params(layout), n_pixels=16), tmp_path / "m.json"))
        code, _, err = run_json(capsys, ["detect", "--image", str(image_path), "--models", f"{path},{path},{path}"])
        assert code == 2
        assert "DETECT-001" in err

    def test_tn2circ_merge(self, capsys, tmp_path):
        """A chain with directions from the command line merges its source block."""
        graph = tmp_path / "chain.txt"
        graph.write_text("0 1 2 b0\n1 2 2 b1\n2 3 2 b2\n" + "".join(f"{v} * 2 p{v}\n" for v in range(4)))
        out = tmp_path / "layout.txt"
        code, document, _ = run_json(capsys, ["tn2circ", "--graph", str(graph), "--directions", "*=in",
                                              "--merge", "--out", str(out)])
        assert code == 0
        assert document["blocks"] == 3
        assert document["wires"] == 4
        assert out.read_text().startswith("# blocks 3\n# wires 4\n")
