"""
Model checkpoints (versioned JSON) and line-delimited metrics streams.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional, Union

import jsonschema

from ansatz import AnsatzLayout, ParamVector
from core.exceptions import FileError, FormatError
from .model import TrainedModel, TrainingConfig

FORMAT_VERSION = 1

CHECKPOINT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["format_version", "layout", "params", "seed", "config"],
    "properties": {
        "format_version": {"const": FORMAT_VERSION},
        "layout": {
            "type": "object",
            "required": ["kind", "n", "n_V", "b", "L"],
            "properties": {
                "kind": {"enum": ["MPS", "TTN"]},
                "n": {"type": "integer", "minimum": 2},
                "n_V": {"type": "integer", "minimum": 1},
                "b": {"type": "integer", "minimum": 2},
                "L": {"type": "integer", "minimum": 1},
                "entangling_range": {"type": "integer", "minimum": 1},
                "share_weights": {"type": "boolean"},
            },
        },
        "params": {"type": "array", "items": {"type": "number"}},
        "seed": {"type": "integer"},
        "n_pixels": {"type": ["integer", "null"]},
        "initial_loss": {"type": ["number", "null"]},
        "config": {"type": "object"},
        "history": {"type": "array", "items": {"type": "object"}},
    },
}


def model_to_dict(model: TrainedModel, include_history: bool = True) -> Dict[str, Any]:
    layout = model.layout
    document = {
        "format_version": FORMAT_VERSION,
        "layout": {
            "kind": layout.kind.value,
            "n": layout.n_qubits,
            "n_V": layout.n_bond_qubits,
            "b": layout.block.n_block_qubits,
            "L": layout.block.n_layers,
            "entangling_range": layout.block.entangling_range,
            "share_weights": layout.share_weights,
        },
        "params": [float(v) for v in model.params.values],
        "seed": int(model.config.seed),
        "n_pixels": model.n_pixels,
        "initial_loss": model.initial_loss,
        "config": model.config.to_dict(),
    }
    if include_history:
        document["history"] = model.history
    return document


def model_from_dict(document: Dict[str, Any], source: str = "<dict>") -> TrainedModel:
    """
    Rebuild a model from a checkpoint document.

    Raises:
        FormatError: If the document does not match the checkpoint schema.
    """
    try:
        jsonschema.validate(document, CHECKPOINT_SCHEMA)
    except jsonschema.ValidationError as e:
        raise FormatError(source, f"invalid checkpoint: {e.message}")

    spec = document["layout"]
    layout = AnsatzLayout.from_dict({
        "kind": spec["kind"],
        "n_qubits": spec["n"],
        "n_bond_qubits": spec["n_V"],
        "block_qubits": spec["b"],
        "n_layers": spec["L"],
        "entangling_range": spec.get("entangling_range", 1),
        "share_weights": spec.get("share_weights", False),
    })
    return TrainedModel(
        layout=layout,
        params=ParamVector.for_layout(layout, document["params"]),
        history=list(document.get("history", [])),
        config=TrainingConfig.from_dict(document["config"]),
        n_pixels=document.get("n_pixels"),
        initial_loss=document.get("initial_loss"),
    )


def save_checkpoint(model: TrainedModel, path: Union[str, Path]) -> Path:
    """
    Write a model as JSON.

    Raises:
        FileError: If the file cannot be written.
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(model_to_dict(model), indent=2, sort_keys=True))
    except OSError as e:
        raise FileError(path, f"cannot write checkpoint: {e}")
    return path


def load_checkpoint(path: Union[str, Path]) -> TrainedModel:
    """
    Read a model written by ``save_checkpoint``.

    Raises:
        FileError: If the file cannot be read.
        FormatError: If it is not a valid checkpoint.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise FileError(path, f"cannot read checkpoint: {e}")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(path, f"invalid JSON: {e.msg}", line=e.lineno)
    return model_from_dict(document, str(path))


class MetricsWriter:
    """
    Append one JSON object per training iteration to a file.

    Usable as a context manager and as a training callback.
    """

    FIELDS = ("iter", "loss", "train_acc", "test_acc")

    def __init__(self, path: Optional[Union[str, Path]]):
        self.path = Path(path) if path else None
        self._handle = None
        self.lines_written = 0

    def __enter__(self):
        if self.path is not None:
            try:
                self.path.parent.mkdir(parents=True, exist_ok=True)
                self._handle = self.path.open("w")
            except OSError as e:
                raise FileError(self.path, f"cannot open metrics file: {e}")
        return self

    def __call__(self, record: Dict[str, Any]) -> None:
        if self._handle is None:
            return
        line = {key: record.get(key) for key in self.FIELDS}
        self._handle.write(json.dumps(line, sort_keys=True) + "\n")
        self.lines_written += 1

    def __exit__(self, exc_type, exc, tb):
        if self._handle is not None:
            self._handle.close()
            self._handle = None
        return False
