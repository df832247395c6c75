"""
Preset Service

Resolves presets and builds (and caches) their Sobolev families and
moment bases.

Business Rules:
1. A basis depends only on (family, Sobolev parameters, block size), so
   presets sharing them share one cached basis.
2. Custom presets are validated exactly like built-in ones.
"""

import logging
import threading
from typing import Dict, List, Optional, Tuple

from core.conf import sobomark_setting
from core.models.basis import MomentBasis
from core.models.family import FamilyParams
from core.models.preset import Preset
from core.models.sobolev import SobolevFamily, SobolevParams
from core.numerics.momentbasis import build_basis
from core.numerics.sobolev import build_sobolev_family
from core.repositories.preset_repository import PresetRepository

logger = logging.getLogger(__name__)


class PresetService:
    """Service class for preset lookup and basis construction"""

    def __init__(self, repository=None):
        """Initialize service with repository"""
        self.repository = repository or PresetRepository()
        self._bases: Dict[Tuple, MomentBasis] = {}
        self._lock = threading.Lock()

    def get_all_presets(self) -> List[Preset]:
        return self.repository.get_all()

    def get_preset(self, name: str) -> Preset:
        """
        Raises:
            PresetNotFoundError: unknown name
        """
        return self.repository.get(name)

    def resolve(self, preset) -> Preset:
        """Accept a Preset or a preset name."""
        return preset if isinstance(preset, Preset) else self.get_preset(preset)

    def sobolev_family(self, fam: FamilyParams, sob: SobolevParams, n_max: Optional[int] = None) -> SobolevFamily:
        return build_sobolev_family(fam, sob, n_max)

    def get_basis(self, preset, size: Optional[int] = None) -> MomentBasis:
        preset = self.resolve(preset)
        size = size or sobomark_setting('BLOCK_SIZE')
        key = (preset.family_params(), preset.sobolev_params(), size)
        with self._lock:
            basis = self._bases.get(key)
            if basis is None:
                sf = build_sobolev_family(*key[:2], n_max=max(sobomark_setting('N_MAX'), size))
                basis = build_basis(sf, size)
                self._bases[key] = basis
                logger.info("Cached basis for preset %s", preset.name)
        return basis

    def dump_presets(self, directory, name: Optional[str] = None) -> list:
        presets = [self.get_preset(name)] if name else self.get_all_presets()
        return [self.repository.dump(preset, directory) for preset in presets]
