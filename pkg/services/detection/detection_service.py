"""
Detection service: configured pipeline runs over image and model files.
"""

import logging
from dataclasses import replace
from pathlib import Path
from typing import Optional, Sequence, Union

from ansatz import AnsatzLayout
from core.base.base_service import BaseService
from core.decorators import log_execution, performance_monitor
from core.exceptions import DetectionError
from core.interfaces.classifier import WindowClassifier
from core.interfaces.configurable import Configurable
from core.interfaces.loggable import Loggable
from services.training import TrainedModel, TrainingConfig, TrainingService, load_checkpoint
from .classifiers import ModelClassifier
from .images import GrayImage, center_crop_resize, load_pgm
from .pipeline import DetectionReport, DetectorConfig, detect
from .report import highlight_to_ppm, save_report
from .synthetic import build_window_dataset

_module_logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class DetectionService(BaseService, Configurable, Loggable):
    """
    Runs the three-stage detector from the ``detection`` config section.

    Keys: ``coarse_side``, ``window``, ``fine_window``, ``window_stride``,
    ``fine_stride``, ``black_threshold``, ``bias_amplitude``,
    ``pixel_encoding``, ``stage_target_step`` and ``max_workers``.
    """

    service_name = "detection_service"

    def __init__(self, config=None):
        """
        Initialize the DetectionService.

        Args:
            config: Configuration for the service.
        """
        super().__init__(config)
        self.detector = self.detector_config()
        self.logger.info(
            f"Initialized detection service ({self.detector.coarse_side}/"
            f"{self.detector.window}/{self.detector.fine_window})"
        )

    def detector_config(self, **overrides) -> DetectorConfig:
        """DetectorConfig from the configuration; None overrides are ignored."""
        settings = {
            name: self.config.get(f"detection.{name}", default)
            for name, default in DetectorConfig().to_dict().items()
        }
        settings.update({k: v for k, v in overrides.items() if v is not None})
        cfg = DetectorConfig(**settings)
        cfg.validate_or_raise()
        return cfg

    @log_execution(_module_logger)
    @performance_monitor(_module_logger)
    def run(self, image: GrayImage, coarse_model: WindowClassifier, window_model: WindowClassifier,
            fine_model: WindowClassifier, black_threshold: Optional[float] = None) -> DetectionReport:
        """
        Detect defects in one image.

        Raises:
            DetectionError: If a model does not fit its stage.
        """
        report = detect(image, coarse_model, window_model, fine_model, black_threshold, self.detector)
        self.logger.info(
            f"Detection: stage1={'defect' if report.defect else 'no-defect'}, "
            f"{len(report.stage2_boxes)} coarse and {len(report.stage3_boxes)} fine boxes, "
            f"{report.highlighted_pixels} pixels highlighted"
        )
        return report

    def load_models(self, paths: Sequence[PathLike]):
        """
        Load the coarse, window and fine model checkpoints.

        Raises:
            DetectionError: Unless exactly three paths are given.
            FileError: If a checkpoint cannot be read.
        """
        if len(paths) != 3:
            raise DetectionError(f"Detection needs 3 models (coarse, window, fine), got {len(paths)}")
        return [ModelClassifier(load_checkpoint(p)) for p in paths]

    def detect_file(self, image_path: PathLike, model_paths: Sequence[PathLike],
                    report_path: Optional[PathLike] = None, highlight_path: Optional[PathLike] = None,
                    black_threshold: Optional[float] = None) -> DetectionReport:
        """Run on a PGM file and optionally write the JSON report and PPM highlight."""
        image = load_pgm(image_path)
        coarse, window, fine = self.load_models(model_paths)
        report = self.run(image, coarse, window, fine, black_threshold)
        if report_path:
            save_report(report, report_path)
            self.logger.info(f"Wrote report to {report_path}")
        if highlight_path:
            highlight_to_ppm(report, highlight_path)
            self.logger.info(f"Wrote highlight to {highlight_path}")
        return report

    def train_stage_model(self, images: Sequence[GrayImage], side: int, layout: AnsatzLayout,
                          cfg: Optional[TrainingConfig] = None,
                          training_service: Optional[TrainingService] = None,
                          seed: int = 0) -> TrainedModel:
        """
        Train a stage model on labeled windows of synthetic or user images.

        Images are center-cropped to ``coarse_side`` first; windows of side
        ``side`` are labeled by whether they hold dark pixels. A side equal
        to ``coarse_side`` trains the stage-1 model on whole crops.

        Windows are encoded with the detector's ``pixel_encoding`` and a
        bias of ``bias_amplitude * side``, so defect windows carry more
        weight in the pixel slots than in the bias slot. Blocks start near
        the identity with the readout sign picked by initial loss, and SPSA
        refines them with first steps of ``stage_target_step``. On a
        two-layer MPS the identity start already reads the pixel/bias
        balance off the measured wire.
        """
        crops = [center_crop_resize(img, self.detector.coarse_side) for img in images]
        dataset = build_window_dataset(crops, side, black_threshold=self.detector.black_threshold, seed=seed)
        training_service = training_service or TrainingService(self.config)
        cfg = cfg or training_service.training_config(seed=seed)
        bias = None if self.detector.bias_amplitude is None else self.detector.bias_amplitude * side
        cfg = replace(
            cfg,
            bias=bias,
            pixel_encoding=self.detector.pixel_encoding,
            init="identity",
            orient_readout=True,
            spsa=replace(cfg.spsa, target_step=self.detector.stage_target_step),
        )
        self.logger.info(f"Training {side}x{side} stage model on {len(dataset)} windows")
        return training_service.fit(layout, dataset, cfg)
