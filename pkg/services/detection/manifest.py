"""
Directories of labeled PGM images with a ``labels.tsv`` manifest.

The manifest has a header line and one ``filename<TAB>label<TAB>split``
row per image; the split column may be omitted.
"""

import csv
import logging
from pathlib import Path
from typing import List, Union

from core.exceptions import FileError, FormatError
from services.training.dataset import LabeledDataset
from .images import GrayImage, load_pgm, save_pgm

logger = logging.getLogger(__name__)

MANIFEST_NAME = "labels.tsv"


def write_image_dir(dataset: LabeledDataset, side: int, out_dir: Union[str, Path],
                    binary: bool = True) -> Path:
    """
    Save every item as ``<name>.pgm`` plus the manifest.

    Returns:
        Path: The manifest path.

    Raises:
        FileError: If the directory or a file cannot be written.
    """
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise FileError(out_dir, f"cannot create directory: {e}")

    splits = {i: "train" for i in dataset.train}
    splits.update({i: "test" for i in dataset.test})
    rows = []
    for index, (pixels, label) in enumerate(dataset.items):
        name = dataset.names[index] if index < len(dataset.names) else f"img{index:04d}"
        filename = f"{name}.pgm"
        save_pgm(GrayImage.from_vector(pixels, side, side), out_dir / filename, binary=binary)
        rows.append((filename, label, splits.get(index, "")))

    manifest = out_dir / MANIFEST_NAME
    try:
        with manifest.open("w", newline="") as handle:
            writer = csv.writer(handle, delimiter="\t", lineterminator="\n")
            writer.writerow(("filename", "label", "split"))
            writer.writerows(rows)
    except OSError as e:
        raise FileError(manifest, f"cannot write manifest: {e}")
    logger.debug("Wrote %d images to %s", len(rows), out_dir)
    return manifest


def read_image_dir(path: Union[str, Path], seed: int = 0, train_fraction: float = 0.5) -> LabeledDataset:
    """
    Load a directory written by ``write_image_dir``.

    The stored split is used when every row has one; otherwise the items
    are split at random with ``seed``.

    Raises:
        FileError: If the manifest or an image is missing.
        FormatError: On malformed manifest rows.
    """
    path = Path(path)
    manifest = path / MANIFEST_NAME
    try:
        with manifest.open(newline="") as handle:
            rows = list(csv.reader(handle, delimiter="\t"))
    except OSError as e:
        raise FileError(manifest, f"cannot read manifest: {e}")

    items = []
    names: List[str] = []
    splits: List[str] = []
    for lineno, row in enumerate(rows, start=1):
        if not row or (lineno == 1 and row[0] == "filename"):
            continue
        if len(row) < 2:
            raise FormatError(manifest, "expected 'filename<TAB>label[<TAB>split]'", line=lineno)
        try:
            label = int(row[1])
        except ValueError:
            raise FormatError(manifest, f"label {row[1]!r} is not an integer", line=lineno)
        image = load_pgm(path / row[0])
        items.append((image.vector(), label))
        names.append(Path(row[0]).stem)
        splits.append(row[2] if len(row) > 2 else "")

    if splits and all(s in ("train", "test") for s in splits):
        train = [i for i, s in enumerate(splits) if s == "train"]
        test = [i for i, s in enumerate(splits) if s == "test"]
        return LabeledDataset(items, train, test, names)
    return LabeledDataset.with_random_split(items, seed=seed, train_fraction=train_fraction, names=names)
