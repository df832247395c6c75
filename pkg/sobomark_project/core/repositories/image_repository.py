"""
Image Repository

Handles reading and writing images and watermark bit patterns with Pillow.

Business Rules:
1. Only lossless formats are written (PNG, BMP, TIFF), so a saved image
   reads back byte-identical.
2. Covers load as H x W (grayscale) or H x W x 3 (RGB) uint8 arrays; alpha
   and palette images are converted to RGB.
3. Watermarks load as 64 x 64 {0,1} arrays either from a bilevel/grayscale
   image (pixel > 127 is a 1) or from a 512-byte .bin file (MSB first).
"""

from pathlib import Path
from typing import List

import numpy as np
from PIL import Image, UnidentifiedImageError

from core.conf import sobomark_setting
from core.exceptions import DimensionError, ImageFormatError

LOSSLESS_SUFFIXES = ('.png', '.bmp', '.tif', '.tiff')
IMAGE_SUFFIXES = LOSSLESS_SUFFIXES + ('.pgm', '.ppm', '.pbm')


def _to_array(image: Image.Image) -> np.ndarray:
    if image.mode in ('L', 'RGB'):
        return np.array(image, dtype=np.uint8)
    if image.mode in ('1', 'I;16', 'I', 'F'):
        return np.array(image.convert('L'), dtype=np.uint8)
    return np.array(image.convert('RGB'), dtype=np.uint8)


def watermark_from_image(image: Image.Image) -> np.ndarray:
    return (np.array(image.convert('L'), dtype=np.uint8) > 127).astype(np.uint8)


def watermark_from_bytes(data: bytes) -> np.ndarray:
    side = sobomark_setting('WATERMARK_SIDE')
    if len(data) * 8 != side * side:
        raise DimensionError(f"Watermark .bin files must hold {side * side // 8} bytes, got {len(data)}.")
    return np.unpackbits(np.frombuffer(data, dtype=np.uint8)).reshape(side, side)


def check_watermark(bits: np.ndarray) -> np.ndarray:
    side = sobomark_setting('WATERMARK_SIDE')
    if bits.shape != (side, side):
        raise DimensionError(f"Watermarks must be {side}x{side}, got {bits.shape[1]}x{bits.shape[0]}.")
    return bits


class ImageRepository:
    """File access for covers, stego images and watermarks"""

    def load(self, path) -> np.ndarray:
        path = Path(path)
        try:
            with Image.open(path) as image:
                return _to_array(image)
        except (OSError, UnidentifiedImageError) as exc:
            raise ImageFormatError(f"Cannot read image {path}: {exc}")

    def save(self, path, array: np.ndarray) -> None:
        path = Path(path)
        if path.suffix.lower() not in LOSSLESS_SUFFIXES:
            raise ImageFormatError(
                f"Refusing to write {path}: use a lossless format ({', '.join(LOSSLESS_SUFFIXES)})."
            )
        array = np.asarray(array)
        if array.dtype != np.uint8 or array.ndim not in (2, 3):
            raise ImageFormatError(f"Images are written from H x W [x C] uint8 arrays, got {array.dtype} {array.shape}.")
        path.parent.mkdir(parents=True, exist_ok=True)
        Image.fromarray(array).save(path)

    def list_images(self, directory) -> List[str]:
        """Image files directly inside a directory, sorted by name"""
        directory = Path(directory)
        if not directory.is_dir():
            raise ImageFormatError(f"Cover directory {directory} does not exist.")
        return sorted(str(p) for p in directory.iterdir() if p.suffix.lower() in IMAGE_SUFFIXES)

    def load_watermark(self, path) -> np.ndarray:
        path = Path(path)
        if path.suffix.lower() == '.bin':
            try:
                return watermark_from_bytes(path.read_bytes())
            except OSError as exc:
                raise ImageFormatError(f"Cannot read watermark {path}: {exc}")
        try:
            with Image.open(path) as image:
                return check_watermark(watermark_from_image(image))
        except (OSError, UnidentifiedImageError) as exc:
            raise ImageFormatError(f"Cannot read watermark {path}: {exc}")

    def save_watermark(self, path, bits: np.ndarray) -> None:
        self.save(path, (np.asarray(bits, dtype=np.uint8) * 255).astype(np.uint8))
