"""
Preset Repository

Built-in moment / watermark presets plus user presets read from
key=value files (`<NAME>.preset`) in the configured PRESET_DIR.

Business Rules:
1. Built-in presets cannot be shadowed: a file with a built-in name is
   skipped with a warning.
2. Preset files must name every required field; gamma only for Meixner.
"""

import logging
from pathlib import Path
from typing import Dict, List, Optional

from core.conf import sobomark_setting
from core.exceptions import ParameterError, PresetNotFoundError
from core.models.family import FamilyKind
from core.models.preset import Preset
from core.repositories.keyvalue import format_key_values, parse_key_values

logger = logging.getLogger(__name__)

PRESET_SUFFIX = '.preset'
REQUIRED_FIELDS = ('name', 'family', 'mu', 'lam', 'alpha', 'j', 'qim_delta')
OPTIONAL_FIELDS = ('gamma', 'coeff_index')

BUILTIN_PRESETS = (
    Preset('CS_I', FamilyKind.CHARLIER, mu=0.0007, lam=1e-47, alpha=-17, j=5, qim_delta=120, builtin=True),
    Preset('CS_II', FamilyKind.CHARLIER, mu=0.0005, lam=1e-77, alpha=-21, j=3, qim_delta=120, builtin=True),
    Preset('MS_I', FamilyKind.MEIXNER, mu=0.0008, gamma=0.000041, lam=1e-47, alpha=-17, j=5,
           qim_delta=90, builtin=True),
    Preset('MS_II', FamilyKind.MEIXNER, mu=0.0001, gamma=0.000075, lam=1e-77, alpha=-21, j=3,
           qim_delta=120, builtin=True),
)


def parse_preset_text(text: str, source: str = '<preset>') -> Preset:
    values = parse_key_values(text, source, ParameterError)
    missing = [name for name in REQUIRED_FIELDS if name not in values]
    if missing:
        raise ParameterError(f"{source}: missing {', '.join(missing)}.")
    unknown = sorted(set(values) - set(REQUIRED_FIELDS) - set(OPTIONAL_FIELDS))
    if unknown:
        raise ParameterError(f"{source}: unknown keys {', '.join(unknown)}.")
    try:
        return Preset(
            name=values['name'],
            family=values['family'].lower(),
            mu=float(values['mu']),
            lam=float(values['lam']),
            alpha=float(values['alpha']),
            j=int(values['j']),
            qim_delta=float(values['qim_delta']),
            coeff_index=int(values.get('coeff_index', 28)),
            gamma=float(values['gamma']) if 'gamma' in values else None,
        )
    except ValueError as exc:
        raise ParameterError(f"{source}: {exc}")


def format_preset(preset: Preset) -> str:
    return format_key_values({key: (repr(value) if isinstance(value, float) else str(value))
                              for key, value in preset.as_dict().items()})


class PresetRepository:
    """Access to built-in and file-based presets"""

    def __init__(self, preset_dir: Optional[str] = None):
        self.preset_dir = preset_dir if preset_dir is not None else sobomark_setting('PRESET_DIR')
        self._presets: Optional[Dict[str, Preset]] = None

    def _load(self) -> Dict[str, Preset]:
        if self._presets is not None:
            return self._presets
        presets = {preset.name: preset for preset in BUILTIN_PRESETS}
        if self.preset_dir:
            directory = Path(self.preset_dir)
            if not directory.is_dir():
                logger.warning("Preset directory %s does not exist", directory)
            else:
                for path in sorted(directory.glob('*' + PRESET_SUFFIX)):
                    preset = parse_preset_text(path.read_text(encoding='utf-8'), str(path))
                    if preset.name in presets and presets[preset.name].builtin:
                        logger.warning("Preset file %s cannot replace built-in %s", path, preset.name)
                        continue
                    presets[preset.name] = preset
        self._presets = presets
        return presets

    def get_all(self) -> List[Preset]:
        return list(self._load().values())

    def get_by_name(self, name: str) -> Optional[Preset]:
        return self._load().get(name)

    def get(self, name: str) -> Preset:
        preset = self.get_by_name(name)
        if preset is None:
            raise PresetNotFoundError(
                f"Preset '{name}' not found; available: {', '.join(self._load())}."
            )
        return preset

    def dump(self, preset: Preset, directory) -> Path:
        """Write a preset as <directory>/<name>.preset"""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        path = directory / (preset.name + PRESET_SUFFIX)
        path.write_text(format_preset(preset), encoding='utf-8')
        return path
