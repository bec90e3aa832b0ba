"""
Grayscale images: PGM/PPM files, center crop with bilinear resize and
sliding windows.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from core.exceptions import DetectionError, FileError, FormatError

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


@dataclass
class GrayImage:
    """
    Row-major grayscale image with values clamped to [0, 1].

    Attributes:
        pixels: Array of shape (height, width).
    """
    pixels: np.ndarray

    def __post_init__(self):
        data = np.asarray(self.pixels, dtype=float)
        if data.ndim != 2 or data.size == 0:
            raise DetectionError(f"Images need a non-empty 2-D pixel array, got shape {data.shape}")
        self.pixels = np.clip(data, 0.0, 1.0)

    @classmethod
    def from_vector(cls, values, width: int, height: int) -> "GrayImage":
        values = np.asarray(values, dtype=float)
        if values.size != width * height:
            raise DetectionError(f"{values.size} values cannot fill a {width}x{height} image")
        return cls(values.reshape(height, width))

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @property
    def size(self) -> int:
        return self.pixels.size

    def vector(self) -> np.ndarray:
        return self.pixels.ravel()

    def crop(self, x: int, y: int, w: int, h: int) -> "GrayImage":
        if x < 0 or y < 0 or x + w > self.width or y + h > self.height:
            raise DetectionError(f"Crop ({x}, {y}, {w}, {h}) leaves the {self.width}x{self.height} image")
        return GrayImage(self.pixels[y:y + h, x:x + w].copy())

    def to_bytes(self) -> np.ndarray:
        """8-bit quantization."""
        return np.rint(self.pixels * 255.0).astype(np.uint8)


# Netpbm files

def _read_header(data: bytes, n_fields: int, path) -> Tuple[List[str], int]:
    """
    Read whitespace-separated header tokens, skipping ``#`` comments.

    Returns the tokens and the offset just past the single whitespace
    byte that follows the last one.
    """
    tokens = []
    pos = 0
    while len(tokens) < n_fields:
        while pos < len(data) and chr(data[pos]).isspace():
            pos += 1
        if pos >= len(data):
            raise FormatError(path, "truncated header")
        if data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not chr(data[pos]).isspace():
            pos += 1
        tokens.append(data[start:pos].decode("ascii", errors="replace"))
    return tokens, pos + 1


def _header_ints(tokens: List[str], path) -> Tuple[int, int, int]:
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError:
        raise FormatError(path, f"non-numeric header fields {tokens[1:4]}")
    if width < 1 or height < 1:
        raise FormatError(path, f"invalid size {width}x{height}")
    if not 1 <= maxval <= 65535:
        raise FormatError(path, f"maxval {maxval} outside 1..65535")
    return width, height, maxval


def _read_bytes(path: Path) -> bytes:
    try:
        return path.read_bytes()
    except OSError as e:
        raise FileError(path, f"cannot read image: {e}")


def _write_bytes(path: Path, payload: bytes) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_bytes(payload)
    except OSError as e:
        raise FileError(path, f"cannot write image: {e}")
    return path


def parse_pgm(data: bytes, source: str = "<bytes>") -> GrayImage:
    """
    Decode a P2 (ASCII) or P5 (binary) PGM.

    Raises:
        FormatError: On a malformed header or truncated pixel data.
    """
    tokens, offset = _read_header(data, 4, source)
    magic = tokens[0]
    if magic not in ("P2", "P5"):
        raise FormatError(source, f"unsupported magic {magic!r}; expected P2 or P5")
    width, height, maxval = _header_ints(tokens, source)
    count = width * height

    if magic == "P2":
        values = data[offset - 1:].split()
        if len(values) < count:
            raise FormatError(source, f"expected {count} pixels, found {len(values)}")
        try:
            raw = np.array([int(v) for v in values[:count]], dtype=float)
        except ValueError:
            raise FormatError(source, "non-numeric pixel value")
    else:
        dtype = np.dtype(">u2") if maxval > 255 else np.dtype(np.uint8)
        needed = count * dtype.itemsize
        body = data[offset:offset + needed]
        if len(body) < needed:
            raise FormatError(source, f"truncated pixel data: {len(body)} of {needed} bytes")
        raw = np.frombuffer(body, dtype=dtype).astype(float)

    if raw.max(initial=0) > maxval:
        raise FormatError(source, f"pixel value above maxval {maxval}")
    return GrayImage(raw.reshape(height, width) / maxval)


def load_pgm(path: PathLike) -> GrayImage:
    """
    Read a PGM file; pixels are scaled to [0, 1] by maxval.

    Raises:
        FileError: If the file cannot be read.
        FormatError: If it is not a valid P2/P5 image.
    """
    path = Path(path)
    image = parse_pgm(_read_bytes(path), str(path))
    logger.debug("Loaded %dx%d image from %s", image.width, image.height, path)
    return image


def save_pgm(image: GrayImage, path: PathLike, binary: bool = True) -> Path:
    """Write an 8-bit PGM, P5 by default or P2 when ``binary`` is False."""
    data = image.to_bytes()
    if binary:
        payload = f"P5\n{image.width} {image.height}\n255\n".encode("ascii") + data.tobytes()
    else:
        rows = "\n".join(" ".join(str(v) for v in row) for row in data)
        payload = f"P2\n{image.width} {image.height}\n255\n{rows}\n".encode("ascii")
    return _write_bytes(Path(path), payload)


def save_ppm(rgb: np.ndarray, path: PathLike) -> Path:
    """Write an (H, W, 3) uint8 array as a binary P6 PPM."""
    rgb = np.asarray(rgb)
    if rgb.ndim != 3 or rgb.shape[2] != 3:
        raise DetectionError(f"PPM output needs shape (H, W, 3), got {rgb.shape}")
    height, width = rgb.shape[:2]
    header = f"P6\n{width} {height}\n255\n".encode("ascii")
    return _write_bytes(Path(path), header + rgb.astype(np.uint8).tobytes())


def load_ppm(path: PathLike) -> np.ndarray:
    """
    Read an 8-bit P6 PPM into an (H, W, 3) uint8 array.

    Raises:
        FileError: If the file cannot be read.
        FormatError: On a malformed or truncated file.
    """
    path = Path(path)
    data = _read_bytes(path)
    tokens, offset = _read_header(data, 4, path)
    if tokens[0] != "P6":
        raise FormatError(path, f"unsupported magic {tokens[0]!r}; expected P6")
    width, height, maxval = _header_ints(tokens, path)
    if maxval > 255:
        raise FormatError(path, "16-bit PPM files are not supported")
    needed = width * height * 3
    body = data[offset:offset + needed]
    if len(body) < needed:
        raise FormatError(path, f"truncated pixel data: {len(body)} of {needed} bytes")
    return np.frombuffer(body, dtype=np.uint8).reshape(height, width, 3).copy()


# Geometry

def center_crop_resize(image: GrayImage, side: int) -> GrayImage:
    """
    Crop the largest centered square and resize it bilinearly to side x side.

    Sample positions use pixel centers, so a same-size square is returned
    unchanged and constant images stay constant.
    """
    if image.width < 2 or image.height < 2:
        raise DetectionError(f"Cannot resize a {image.width}x{image.height} image")
    if side < 1:
        raise DetectionError(f"Target side must be positive, got {side}")

    s = min(image.width, image.height)
    x0 = (image.width - s) // 2
    y0 = (image.height - s) // 2
    square = image.pixels[y0:y0 + s, x0:x0 + s]
    if s == side:
        return GrayImage(square.copy())

    coords = np.clip((np.arange(side) + 0.5) * s / side - 0.5, 0.0, s - 1)
    lo = np.floor(coords).astype(int)
    hi = np.minimum(lo + 1, s - 1)
    frac = coords - lo

    rows = square[lo, :] * (1.0 - frac)[:, None] + square[hi, :] * frac[:, None]
    out = rows[:, lo] * (1.0 - frac)[None, :] + rows[:, hi] * frac[None, :]
    logger.debug("Resized %dx%d crop to %dx%d", s, s, side, side)
    return GrayImage(out)


def sliding_windows(image: GrayImage, window: int, stride: Optional[int] = None) -> List[Tuple[int, int, GrayImage]]:
    """
    Square windows at every stride offset that fits, in row-major order.

    Args:
        image: Source image.
        window: Window side.
        stride: Step between offsets; defaults to ``window``.

    Returns:
        List of (x, y, window image).

    Raises:
        DetectionError: If the window exceeds the image or stride < 1.
    """
    stride = window if stride is None else stride
    if window < 1 or stride < 1:
        raise DetectionError(f"Window {window} and stride {stride} must be positive")
    if window > image.width or window > image.height:
        raise DetectionError(f"Window {window} does not fit the {image.width}x{image.height} image")

    return [
        (x, y, GrayImage(image.pixels[y:y + window, x:x + window].copy()))
        for y in range(0, image.height - window + 1, stride)
        for x in range(0, image.width - window + 1, stride)
    ]
