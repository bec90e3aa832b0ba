"""
Bars-and-stripes data, grayscale images and sliding-window defect detection.
"""

from .images import (
    GrayImage,
    center_crop_resize,
    load_pgm,
    load_ppm,
    parse_pgm,
    save_pgm,
    save_ppm,
    sliding_windows
)
from .bas import bas_images, generate_bas, sample_bas
from .classifiers import DarkPixelClassifier, ModelClassifier
from .synthetic import build_window_dataset, synthetic_weld_image
from .pipeline import DEFECT, NO_DEFECT, Box, DetectionReport, DetectorConfig, classify_windows, detect
from .report import REPORT_SCHEMA, highlight_to_ppm, report_to_dict, save_report
from .manifest import MANIFEST_NAME, read_image_dir, write_image_dir
from .detection_service import DetectionService

__all__ = [
    'GrayImage', 'center_crop_resize', 'load_pgm', 'load_ppm', 'parse_pgm', 'save_pgm', 'save_ppm',
    'sliding_windows',
    'bas_images', 'generate_bas', 'sample_bas',
    'DarkPixelClassifier', 'ModelClassifier',
    'build_window_dataset', 'synthetic_weld_image',
    'DEFECT', 'NO_DEFECT', 'Box', 'DetectionReport', 'DetectorConfig', 'classify_windows', 'detect',
    'REPORT_SCHEMA', 'highlight_to_ppm', 'report_to_dict', 'save_report',
    'MANIFEST_NAME', 'read_image_dir', 'write_image_dir',
    'DetectionService'
]
