"""
Watermark Service

Embeds and extracts the dual watermark for a preset, with optional
per-call overrides of the chaos key and QIM settings.

Business Rules:
1. Overrides (x0, mu_c, delta, coeff_index, channel policy) replace the
   key-file / preset values only where given.
2. Embedding reports PSNR against the cover.
3. Extraction always writes the complete tamper map, authentic or not.
"""

import hashlib
import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.conf import sobomark_setting
from core.models.preset import Preset
from core.models.watermark import ExtractionResult, KeyMaterial, QimConfig, WatermarkPayload
from core.numerics import watermarkcore
from core.numerics.metrics import psnr
from core.repositories.image_repository import ImageRepository
from core.repositories.key_repository import KeyRepository
from core.services.preset_service import PresetService

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Overrides:
    x0: Optional[float] = None
    mu_c: Optional[float] = None
    delta: Optional[float] = None
    coeff_index: Optional[int] = None
    channels: Optional[str] = None

    @classmethod
    def from_options(cls, options: dict) -> 'Overrides':
        return cls(**{name: options.get(name) for name in cls.__dataclass_fields__})


class WatermarkService:
    """Service class for embedding and extraction"""

    def __init__(self, image_repository=None, key_repository=None, preset_service=None):
        self.image_repository = image_repository or ImageRepository()
        self.key_repository = key_repository or KeyRepository()
        self.preset_service = preset_service or PresetService()

    def qim_config(self, preset: Preset, overrides: Overrides = Overrides()) -> QimConfig:
        return preset.qim_config(delta=overrides.delta, coeff_index=overrides.coeff_index,
                                 channel_policy=overrides.channels,
                                 block_size=sobomark_setting('BLOCK_SIZE'))

    def embed(self, cover: np.ndarray, robust_bits: np.ndarray, material: KeyMaterial, preset,
              overrides: Overrides = Overrides()) -> np.ndarray:
        """
        Embed a 64x64 robust watermark and the fragile signature.

        Raises:
            SizeError / CapacityError: cover unsuitable for the block grid
            ParameterError: invalid overrides
        """
        preset = self.preset_service.resolve(preset)
        material = material.with_chaos(overrides.x0, overrides.mu_c)
        payload = WatermarkPayload(robust_bits=robust_bits, key_kappa=material.kappa)
        cfg = self.qim_config(preset, overrides)
        basis = self.preset_service.get_basis(preset, cfg.block_size)
        return watermarkcore.embed(cover, payload, basis, material.chaos, cfg)

    def extract(self, image: np.ndarray, material: KeyMaterial, preset,
                overrides: Overrides = Overrides()) -> ExtractionResult:
        preset = self.preset_service.resolve(preset)
        material = material.with_chaos(overrides.x0, overrides.mu_c)
        cfg = self.qim_config(preset, overrides)
        basis = self.preset_service.get_basis(preset, cfg.block_size)
        return watermarkcore.extract(image, basis, material.chaos, cfg, material.kappa)

    def embed_file(self, cover_path, watermark_path, key_path, preset_name: str, out_path,
                   overrides: Overrides = Overrides()) -> dict:
        """Embed from files and write the stego image; returns a run summary."""
        preset = self.preset_service.get_preset(preset_name)
        cover = self.image_repository.load(cover_path)
        bits = self.image_repository.load_watermark(watermark_path)
        material = self.key_repository.load(key_path)
        stego = self.embed(cover, bits, material, preset, overrides)
        self.image_repository.save(out_path, stego)
        psnr_db, mse = psnr(cover, stego)
        cfg = self.qim_config(preset, overrides)
        logger.info("Embedded %s into %s with preset %s: PSNR %.2f dB", watermark_path, out_path,
                    preset.name, psnr_db)
        return {
            'cover': str(cover_path),
            'watermark': str(watermark_path),
            'output': str(out_path),
            'preset': preset.as_dict(),
            'delta': cfg.delta,
            'coeff_index': cfg.coeff_index,
            'channels': str(cfg.channel_policy),
            'chaos_key': material.with_chaos(overrides.x0, overrides.mu_c).chaos.describe(),
            'kappa_sha256': hashlib.sha256(material.kappa).hexdigest(),
            'psnr_db': psnr_db,
            'mse': mse,
        }

    def extract_file(self, image_path, key_path, preset_name: str, out_path, tamper_map_path=None,
                     overrides: Overrides = Overrides()) -> ExtractionResult:
        """Extract from a file; writes the robust watermark and, if asked, the tamper map."""
        preset = self.preset_service.get_preset(preset_name)
        image = self.image_repository.load(image_path)
        material = self.key_repository.load(key_path)
        result = self.extract(image, material, preset, overrides)
        self.image_repository.save_watermark(out_path, result.robust_bits)
        if tamper_map_path:
            self.image_repository.save(tamper_map_path, watermarkcore.tamper_map_image(result.tamper_map))
        logger.info("Extracted watermark from %s with preset %s: %s (%d tampered blocks)", image_path,
                    preset.name, 'authentic' if result.authentic else 'NOT authentic', result.tampered_blocks)
        return result
