"""
Mock Key Repository for Testing

Keeps key files as in-memory text so services can be tested without disk.
"""

from typing import Dict

from core.exceptions import KeyFileError
from core.models.watermark import KeyMaterial
from core.repositories.key_repository import format_key, parse_key_text


class MockKeyRepository:
    """Mock repository for key material"""

    def __init__(self):
        self._files: Dict[str, str] = {}
        self._populate_test_data()

    def _populate_test_data(self):
        self._files['test.key'] = "kappa=sobomark test key\nx0=0.3141592653589793\nmu_c=0.2718281828459045\n"

    def load(self, path) -> KeyMaterial:
        text = self._files.get(str(path))
        if text is None:
            raise KeyFileError(f"Cannot read key file {path}: not found")
        return parse_key_text(text, str(path))

    def save(self, path, material: KeyMaterial) -> None:
        self._files[str(path)] = format_key(material)

    def put_text(self, path, text: str) -> None:
        """Store raw key file text (for testing malformed files)"""
        self._files[str(path)] = text

    def clear(self) -> None:
        self._files.clear()
