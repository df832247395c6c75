"""
Mock Image Repository for Testing

Stores arrays in a dict keyed by path, simulating the file system.
"""

from pathlib import PurePath
from typing import Dict, List

import numpy as np

from core.exceptions import ImageFormatError
from core.repositories.image_repository import IMAGE_SUFFIXES, LOSSLESS_SUFFIXES, check_watermark


class MockImageRepository:
    """Mock repository for images and watermarks"""

    def __init__(self):
        self._images: Dict[str, np.ndarray] = {}
        self._watermarks: Dict[str, np.ndarray] = {}

    def add_image(self, path, array) -> None:
        """Register an image (for testing)"""
        self._images[str(path)] = np.array(array, dtype=np.uint8)

    def add_watermark(self, path, bits) -> None:
        self._watermarks[str(path)] = np.array(bits, dtype=np.uint8)

    def load(self, path) -> np.ndarray:
        try:
            return self._images[str(path)].copy()
        except KeyError:
            raise ImageFormatError(f"Cannot read image {path}: not found")

    def save(self, path, array) -> None:
        if PurePath(str(path)).suffix.lower() not in LOSSLESS_SUFFIXES:
            raise ImageFormatError(f"Refusing to write {path}: use a lossless format.")
        self._images[str(path)] = np.array(array, dtype=np.uint8)

    def list_images(self, directory) -> List[str]:
        prefix = str(directory).rstrip('/') + '/'
        found = sorted(p for p in self._images
                       if p.startswith(prefix) and '/' not in p[len(prefix):]
                       and PurePath(p).suffix.lower() in IMAGE_SUFFIXES)
        if not found and not any(p.startswith(prefix) for p in self._images):
            raise ImageFormatError(f"Cover directory {directory} does not exist.")
        return found

    def load_watermark(self, path) -> np.ndarray:
        try:
            return check_watermark(self._watermarks[str(path)].copy())
        except KeyError:
            raise ImageFormatError(f"Cannot read watermark {path}: not found")

    def save_watermark(self, path, bits) -> None:
        self._watermarks[str(path)] = np.array(bits, dtype=np.uint8)

    def exists(self, path) -> bool:
        return str(path) in self._images or str(path) in self._watermarks

    def count(self) -> int:
        return len(self._images)

    def clear(self) -> None:
        self._images.clear()
        self._watermarks.clear()
