import numpy as np
import pytest


class TestDetectorConfig:
    """Test suite for DetectorConfig."""

    def test_defaults(self):
        """Defaults are 256/16/4 with strides equal to the windows."""
        from services.detection import DetectorConfig

        cfg = DetectorConfig()
        assert (cfg.coarse_side, cfg.window, cfg.fine_window) == (256, 16, 4)
        assert cfg.resolved_window_stride == 16
        assert cfg.resolved_fine_stride == 4
        assert cfg.validate() == []

    def test_nesting_checks(self):
        """Windows must nest inside each other."""
        from services.detection import DetectorConfig

        assert DetectorConfig(coarse_side=8, window=16).validate()
        assert DetectorConfig(window=4, fine_window=8).validate()
        assert DetectorConfig(black_threshold=1.5).validate()


class TestDetect:
    """Test suite for the three-stage pipeline."""

    def test_highlights_blob(self, weld, small_config, dark_models):
        """Every blob pixel ends up highlighted and nothing else."""
        from services.detection import detect

        image, mask = weld
        report = detect(image, *dark_models, config=small_config)
        assert report.defect
        assert report.stage2_boxes
        assert np.array_equal(report.highlight, mask)
        assert report.highlighted_pixels == 16

    def test_boxes_nest(self, weld, small_config, dark_models):
        """Each fine box lies inside a flagged coarse box."""
        from services.detection import detect

        report = detect(weld[0], *dark_models, config=small_config)
        assert report.stage3_boxes
        for box in report.stage3_boxes:
            assert any(outer.contains(box) for outer in report.stage2_boxes)
        assert len(set(report.stage3_boxes)) == len(report.stage3_boxes)

    def test_clean_image_stops_after_stage_one(self, clean_image, small_config, dark_models):
        """No defect in stage 1 leaves stages 2 and 3 empty."""
        from services.detection import detect

        report = detect(clean_image, *dark_models, config=small_config)
        assert not report.defect
        assert report.stage2_boxes == [] and report.stage3_boxes == []
        assert report.highlighted_pixels == 0

    def test_threshold_override(self, weld, small_config, dark_models):
        """A threshold below the blob level highlights nothing."""
        from services.detection import detect

        report = detect(weld[0], *dark_models, black_threshold=0.01, config=small_config)
        assert report.stage3_boxes
        assert report.highlighted_pixels == 0
        assert report.params["black_threshold"] == 0.01

    def test_workers_do_not_change_results(self, weld, small_config, dark_models):
        """Parallel window classification keeps the order."""
        from dataclasses import replace

        from services.detection import detect

        serial = detect(weld[0], *dark_models, config=small_config)
        parallel = detect(weld[0], *dark_models, config=replace(small_config, max_workers=3))
        assert parallel.stage2_boxes == serial.stage2_boxes
        assert parallel.stage3_boxes == serial.stage3_boxes

    def test_model_size_mismatch(self, weld, small_config, dark_models):
        """Models must match their stage's window size."""
        from core.exceptions import DetectionError
        from services.detection import DarkPixelClassifier, detect

        coarse, window, _ = dark_models
        with pytest.raises(DetectionError) as excinfo:
            detect(weld[0], coarse, window, DarkPixelClassifier(9), config=small_config)
        assert excinfo.value.details["stage"] == "fine"

    def test_invalid_config(self, weld, dark_models):
        """Invalid geometry raises ValidationError."""
        from core.exceptions import ValidationError
        from services.detection import DetectorConfig, detect

        with pytest.raises(ValidationError):
            detect(weld[0], *dark_models, config=DetectorConfig(coarse_side=32, window=64, fine_window=4))

    def test_resizes_input(self, small_config, dark_models):
        """Larger inputs are center-cropped and resized to the coarse side."""
        from services.detection import GrayImage, detect

        image = GrayImage(np.full((48, 64), 0.8))
        report = detect(image, *dark_models, config=small_config)
        assert (report.image.width, report.image.height) == (32, 32)

    def test_highlight_rgb(self, weld, small_config, dark_models):
        """Highlighted pixels are pure red, others stay gray."""
        from services.detection import detect

        image, mask = weld
        rgb = detect(image, *dark_models, config=small_config).highlight_rgb()
        assert rgb.shape == (32, 32, 3)
        assert np.all(rgb[mask] == [255, 0, 0])
        untouched = rgb[~mask]
        assert np.all(untouched[:, 0] == untouched[:, 1])

    def test_classify_windows_order(self):
        """Chunked classification returns labels in input order."""
        from services.detection import DarkPixelClassifier, classify_windows

        rows = [np.full(4, v) for v in (0.0, 1.0, 0.0, 1.0, 1.0)]
        labels = classify_windows(DarkPixelClassifier(4), rows, max_workers=2)
        assert labels.tolist() == [1, 0, 1, 0, 0]
        assert classify_windows(DarkPixelClassifier(4), []).size == 0


class TestBox:
    """Test suite for Box."""

    def test_contains(self):
        """Containment includes shared edges."""
        from services.detection import Box

        outer = Box(0, 0, 8, 8)
        assert outer.contains(Box(4, 4, 4, 4))
        assert not outer.contains(Box(6, 6, 4, 4))
        assert outer.to_dict() == {"x": 0, "y": 0, "w": 8, "h": 8}
