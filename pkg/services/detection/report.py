"""
Detection report documents and highlight images.
"""

import json
from pathlib import Path
from typing import Any, Dict, Union

import jsonschema

from core.exceptions import FileError, ValidationError
from .images import save_ppm
from .pipeline import DetectionReport

_BOX = {
    "type": "object",
    "required": ["x", "y", "w", "h"],
    "properties": {key: {"type": "integer", "minimum": 0} for key in ("x", "y", "w", "h")},
}

REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["stage1", "stage2_boxes", "stage3_boxes", "params"],
    "properties": {
        "stage1": {"enum": ["defect", "no-defect"]},
        "stage2_boxes": {"type": "array", "items": _BOX},
        "stage3_boxes": {"type": "array", "items": _BOX},
        "highlighted_pixels": {"type": "integer", "minimum": 0},
        "image": {
            "type": "object",
            "properties": {"width": {"type": "integer"}, "height": {"type": "integer"}},
        },
        "params": {"type": "object"},
    },
}


def report_to_dict(report: DetectionReport) -> Dict[str, Any]:
    """
    JSON document of a report, checked against REPORT_SCHEMA.

    Raises:
        ValidationError: If the document does not match the schema.
    """
    document = {
        "stage1": "defect" if report.defect else "no-defect",
        "stage2_boxes": [box.to_dict() for box in report.stage2_boxes],
        "stage3_boxes": [box.to_dict() for box in report.stage3_boxes],
        "highlighted_pixels": report.highlighted_pixels,
        "image": {"width": report.image.width, "height": report.image.height},
        "params": report.params,
    }
    try:
        jsonschema.validate(document, REPORT_SCHEMA)
    except jsonschema.ValidationError as e:
        raise ValidationError(f"Invalid detection report: {e.message}", field="report")
    return document


def save_report(report: DetectionReport, path: Union[str, Path]) -> Path:
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
    except OSError as e:
        raise FileError(path, f"cannot write report: {e}")
    return path


def highlight_to_ppm(report: DetectionReport, path: Union[str, Path]) -> Path:
    """Write the crop as a P6 PPM with highlighted pixels in pure red."""
    return save_ppm(report.highlight_rgb(), path)
