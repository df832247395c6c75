"""
Mock Preset Repository for Testing

Serves the built-in presets plus presets added in memory.
"""

from typing import Dict, List, Optional

from core.exceptions import PresetNotFoundError
from core.models.preset import Preset
from core.repositories.preset_repository import BUILTIN_PRESETS, format_preset


class MockPresetRepository:
    """Mock repository for presets"""

    def __init__(self):
        self._presets: Dict[str, Preset] = {}
        self._dumped: Dict[str, str] = {}
        self._populate_test_data()

    def _populate_test_data(self):
        for preset in BUILTIN_PRESETS:
            self._presets[preset.name] = preset

    def add(self, preset: Preset) -> None:
        self._presets[preset.name] = preset

    def get_all(self) -> List[Preset]:
        return list(self._presets.values())

    def get_by_name(self, name: str) -> Optional[Preset]:
        return self._presets.get(name)

    def get(self, name: str) -> Preset:
        preset = self.get_by_name(name)
        if preset is None:
            raise PresetNotFoundError(f"Preset '{name}' not found; available: {', '.join(self._presets)}.")
        return preset

    def dump(self, preset: Preset, directory) -> str:
        path = f"{str(directory).rstrip('/')}/{preset.name}.preset"
        self._dumped[path] = format_preset(preset)
        return path

    def dumped(self, path) -> Optional[str]:
        """Text written by dump (for testing)"""
        return self._dumped.get(str(path))

    def count(self) -> int:
        return len(self._presets)
