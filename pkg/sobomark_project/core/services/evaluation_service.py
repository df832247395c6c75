"""
Evaluation Service

Runs the robustness sweep: for every cover and preset, embed, extract
clean, then attack with every grid parameter and extract again.

Business Rules:
1. One "none" row per (cover, preset): PSNR cover vs watermarked, BER
   and authenticity of the clean extraction.
2. One row per (cover, preset, attack, parameter): PSNR watermarked vs
   attacked and BER of the attacked extraction.
3. Covers run in a thread pool capped by THREADS; rows come back sorted
   by (image, preset, attack order, parameter), so output is deterministic.
"""

import csv
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, List, Sequence

import numpy as np

from core.conf import sobomark_setting
from core.exceptions import ImageFormatError
from core.models.attack import AttackKind
from core.models.preset import Preset
from core.models.report import CSV_HEADER, MetricReport
from core.models.watermark import KeyMaterial
from core.numerics.attacks import apply_attack
from core.numerics.metrics import ber, psnr
from core.repositories.image_repository import ImageRepository
from core.repositories.key_repository import KeyRepository
from core.services.attack_service import AttackService
from core.services.preset_service import PresetService
from core.services.watermark_service import WatermarkService

logger = logging.getLogger(__name__)

ATTACK_ORDER = {kind.value: index for index, kind in enumerate(AttackKind)}


def _row_key(row: MetricReport):
    return row.image, row.preset, ATTACK_ORDER.get(row.attack, -1), row.param


class EvaluationService:
    """Service class for the robustness / imperceptibility sweep"""

    def __init__(self, image_repository=None, key_repository=None, preset_service=None,
                 watermark_service=None, attack_service=None):
        self.image_repository = image_repository or ImageRepository()
        self.key_repository = key_repository or KeyRepository()
        self.preset_service = preset_service or PresetService()
        self.watermark_service = watermark_service or WatermarkService(
            self.image_repository, self.key_repository, self.preset_service)
        self.attack_service = attack_service or AttackService(self.image_repository)

    def evaluate_cover(self, name: str, cover: np.ndarray, bits: np.ndarray, material: KeyMaterial,
                       preset: Preset, seed: int = 0) -> List[MetricReport]:
        stego = self.watermark_service.embed(cover, bits, material, preset)
        psnr_db, mse = psnr(cover, stego)
        clean = self.watermark_service.extract(stego, material, preset)
        rows = [MetricReport(psnr_db=psnr_db, mse=mse, ber=ber(bits, clean.robust_bits), image=name,
                             preset=preset.name, attack='none', param=0.0, authentic=clean.authentic)]
        for spec in self.attack_service.grid(seed):
            attacked = apply_attack(stego, spec)
            psnr_db, mse = psnr(stego, attacked)
            result = self.watermark_service.extract(attacked, material, preset)
            rows.append(MetricReport(psnr_db=psnr_db, mse=mse, ber=ber(bits, result.robust_bits),
                                     image=name, preset=preset.name, attack=spec.kind,
                                     param=float(spec.param), authentic=result.authentic))
        return rows

    def evaluate(self, covers: Dict[str, np.ndarray], bits: np.ndarray, material: KeyMaterial,
                 presets: Sequence, seed: int = 0) -> List[MetricReport]:
        """
        Sweep every cover under every preset.

        Raises:
            ImageFormatError: no covers
        """
        if not covers:
            raise ImageFormatError("Evaluation needs at least one cover image.")
        presets = [self.preset_service.resolve(preset) for preset in presets]
        for preset in presets:
            # bases are built up front, outside the worker threads
            self.preset_service.get_basis(preset, sobomark_setting('BLOCK_SIZE'))

        jobs = [(name, cover, preset) for name, cover in covers.items() for preset in presets]
        workers = max(1, min(sobomark_setting('THREADS'), len(jobs)))
        rows: List[MetricReport] = []
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(self.evaluate_cover, name, cover, bits, material, preset, seed)
                       for name, cover, preset in jobs]
            for future in futures:
                rows.extend(future.result())
        rows.sort(key=_row_key)
        logger.info("Evaluated %d covers x %d presets: %d rows", len(covers), len(presets), len(rows))
        return rows

    def evaluate_directory(self, cover_dir, watermark_path, key_path, preset_names: Sequence[str],
                           csv_path, seed: int = 0) -> List[MetricReport]:
        paths = self.image_repository.list_images(cover_dir)
        if not paths:
            raise ImageFormatError(f"Cover directory {cover_dir} holds no images.")
        covers = {Path(path).name: self.image_repository.load(path) for path in paths}
        bits = self.image_repository.load_watermark(watermark_path)
        material = self.key_repository.load(key_path)
        presets = [self.preset_service.get_preset(name) for name in preset_names]
        rows = self.evaluate(covers, bits, material, presets, seed)
        self.write_csv(rows, csv_path)
        return rows

    def write_csv(self, rows: Sequence[MetricReport], path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open('w', newline='', encoding='utf-8') as handle:
            writer = csv.writer(handle)
            writer.writerow(CSV_HEADER)
            writer.writerows(row.as_csv_row() for row in rows)
