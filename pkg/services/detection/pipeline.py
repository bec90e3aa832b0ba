"""
Three-stage sliding-window defect detection.

Stage 1 classifies the center crop as a whole; stage 2 flags coarse
windows of the crop; stage 3 flags fine windows inside the flagged coarse
windows. Dark pixels inside stage-3 boxes are painted red.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, ClassVar, Dict, List, Optional

import numpy as np

from core.data.validation import ChoiceValidator, RangeValidator, Validator, ValidatableMixin
from core.exceptions import DetectionError
from core.interfaces.classifier import WindowClassifier
from services.training.encoding import PIXEL_ENCODINGS
from .images import GrayImage, center_crop_resize, sliding_windows

logger = logging.getLogger(__name__)

DEFECT = 1
NO_DEFECT = 0
HIGHLIGHT_RGB = (255, 0, 0)


@dataclass
class DetectorConfig(ValidatableMixin):
    """
    Pipeline geometry and thresholds.

    Attributes:
        coarse_side: Side of the center crop classified in stage 1.
        window: Stage-2 window side.
        fine_window: Stage-3 window side.
        window_stride: Stage-2 stride; defaults to ``window``.
        fine_stride: Stage-3 stride; defaults to ``fine_window``.
        black_threshold: Pixels below this value are highlighted.
        bias_amplitude: Bias per unit of window side appended to encoded
            windows when training stage models; a window of side s gets
            bias_amplitude * s.
        pixel_encoding: Pixel transform of stage models.
        stage_target_step: SPSA first-step size when training stage models.
        max_workers: Threads classifying windows.
    """
    coarse_side: int = 256
    window: int = 16
    fine_window: int = 4
    window_stride: Optional[int] = None
    fine_stride: Optional[int] = None
    black_threshold: float = 0.25
    bias_amplitude: Optional[float] = 0.21
    pixel_encoding: str = "darkness"
    stage_target_step: float = 0.05
    max_workers: int = 1

    _validators: ClassVar[List[Validator]] = [
        RangeValidator("coarse_side", min_value=1, message="must be positive"),
        RangeValidator("window", min_value=1, message="must be positive"),
        RangeValidator("fine_window", min_value=1, message="must be positive"),
        RangeValidator("window_stride", min_value=1, message="must be positive"),
        RangeValidator("fine_stride", min_value=1, message="must be positive"),
        RangeValidator("black_threshold", min_value=0, max_value=1, message="must lie in [0, 1]"),
        RangeValidator("bias_amplitude", min_value=0, exclusive_min=True, message="must be positive"),
        ChoiceValidator("pixel_encoding", choices=tuple(PIXEL_ENCODINGS), message="is not a known encoding"),
        RangeValidator("stage_target_step", min_value=0, exclusive_min=True, message="must be positive"),
        RangeValidator("max_workers", min_value=1, message="must be at least 1"),
    ]

    def validate(self) -> List[str]:
        errors = super().validate()
        if not errors:
            if self.window > self.coarse_side:
                errors.append(f"window: must not exceed coarse_side (got {self.window})")
            if self.fine_window > self.window:
                errors.append(f"fine_window: must not exceed window (got {self.fine_window})")
        return errors

    @property
    def resolved_window_stride(self) -> int:
        return self.window_stride or self.window

    @property
    def resolved_fine_stride(self) -> int:
        return self.fine_stride or self.fine_window

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class Box:
    """Axis-aligned window in crop coordinates."""
    x: int
    y: int
    w: int
    h: int

    def contains(self, other: "Box") -> bool:
        return (self.x <= other.x and self.y <= other.y
                and other.x + other.w <= self.x + self.w
                and other.y + other.h <= self.y + self.h)

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass
class DetectionReport:
    """
    Outcome of one detection run.

    Attributes:
        stage1_label: 1 when the crop was classified as defective.
        stage2_boxes: Flagged coarse windows.
        stage3_boxes: Flagged fine windows, each inside a stage-2 box.
        image: The center crop every box refers to.
        highlight: Boolean mask of recolored pixels.
        params: Settings the run used.
    """
    stage1_label: int
    stage2_boxes: List[Box]
    stage3_boxes: List[Box]
    image: GrayImage
    highlight: np.ndarray
    params: Dict[str, Any] = field(default_factory=dict)

    @property
    def defect(self) -> bool:
        return self.stage1_label == DEFECT

    @property
    def highlighted_pixels(self) -> int:
        return int(np.count_nonzero(self.highlight))

    def highlight_rgb(self) -> np.ndarray:
        """Grayscale crop as RGB with highlighted pixels in red."""
        gray = self.image.to_bytes()
        rgb = np.repeat(gray[:, :, None], 3, axis=2)
        rgb[self.highlight] = HIGHLIGHT_RGB
        return rgb


def _check_input(classifier: WindowClassifier, side: int, stage: str) -> None:
    if classifier.n_pixels != side * side:
        raise DetectionError(
            f"{stage} model takes {classifier.n_pixels} pixels, windows have {side * side}",
            details={"stage": stage, "expected": side * side, "model": classifier.n_pixels},
        )


def classify_windows(classifier: WindowClassifier, rows: List[np.ndarray], max_workers: int = 1) -> np.ndarray:
    """
    Labels for a list of window vectors, in input order.

    With several workers the rows are split into contiguous chunks and the
    chunk results are concatenated in order.
    """
    if not rows:
        return np.zeros(0, dtype=int)
    if max_workers <= 1 or len(rows) < 2:
        return np.asarray(classifier.predict_many(rows), dtype=int)
    chunks = [list(chunk) for chunk in np.array_split(np.arange(len(rows)), min(max_workers, len(rows)))]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        parts = list(pool.map(lambda idx: classifier.predict_many([rows[i] for i in idx]), chunks))
    return np.concatenate([np.asarray(p, dtype=int) for p in parts])


def detect(image: GrayImage, coarse_model: WindowClassifier, window_model: WindowClassifier,
           fine_model: WindowClassifier, black_threshold: Optional[float] = None,
           config: Optional[DetectorConfig] = None) -> DetectionReport:
    """
    Run the three-stage pipeline on one image.

    Args:
        image: Input image of any size of at least 2x2.
        coarse_model: Classifier of the whole coarse_side^2 crop.
        window_model: Classifier of window^2 windows.
        fine_model: Classifier of fine_window^2 windows.
        black_threshold: Overrides ``config.black_threshold``.
        config: Geometry; defaults to 256/16/4.

    Returns:
        DetectionReport: Boxes and highlight mask; stages 2 and 3 are
        empty when stage 1 finds no defect.

    Raises:
        ValidationError: On an invalid config.
        DetectionError: If a model's input size does not match its stage.
    """
    cfg = config or DetectorConfig()
    if black_threshold is not None:
        cfg = DetectorConfig(**{**cfg.to_dict(), "black_threshold": black_threshold})
    cfg.validate_or_raise()

    _check_input(coarse_model, cfg.coarse_side, "coarse")
    _check_input(window_model, cfg.window, "window")
    _check_input(fine_model, cfg.fine_window, "fine")

    crop = center_crop_resize(image, cfg.coarse_side)
    params = cfg.to_dict()
    highlight = np.zeros(crop.pixels.shape, dtype=bool)

    stage1 = int(coarse_model.predict(crop.vector()))
    logger.debug("Stage 1 label %d", stage1)
    if stage1 != DEFECT:
        return DetectionReport(stage1, [], [], crop, highlight, params)

    windows = sliding_windows(crop, cfg.window, cfg.resolved_window_stride)
    labels = classify_windows(window_model, [w.vector() for _, _, w in windows], cfg.max_workers)
    stage2 = [Box(x, y, cfg.window, cfg.window) for (x, y, _), label in zip(windows, labels) if label == DEFECT]
    logger.debug("Stage 2 flagged %d of %d windows", len(stage2), len(windows))

    candidates: Dict[Box, np.ndarray] = {}
    for box in stage2:
        region = crop.crop(box.x, box.y, box.w, box.h)
        for x, y, sub in sliding_windows(region, cfg.fine_window, cfg.resolved_fine_stride):
            candidates.setdefault(Box(box.x + x, box.y + y, cfg.fine_window, cfg.fine_window), sub.vector())
    fine_boxes = list(candidates)
    labels = classify_windows(fine_model, list(candidates.values()), cfg.max_workers)
    stage3 = [box for box, label in zip(fine_boxes, labels) if label == DEFECT]
    logger.debug("Stage 3 flagged %d of %d windows", len(stage3), len(fine_boxes))

    dark = crop.pixels < cfg.black_threshold
    for box in stage3:
        region = (slice(box.y, box.y + box.h), slice(box.x, box.x + box.w))
        highlight[region] |= dark[region]

    return DetectionReport(stage1, stage2, stage3, crop, highlight, params)
