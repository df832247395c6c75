"""
Imperceptibility and robustness metrics.

PSNR = 10 log10(peak^2 / MSE), where the peak is the largest sample of
either image and MSE averages over every sample of every channel.
BER is the fraction of mismatched bits.
"""

import math
from typing import Tuple

import numpy as np

from core.exceptions import DimensionError


def psnr(cover, stego) -> Tuple[float, float]:
    """(psnr_db, mse); identical images give (inf, 0.0)."""
    cover = np.asarray(cover, dtype=np.float64)
    stego = np.asarray(stego, dtype=np.float64)
    if cover.shape != stego.shape:
        raise DimensionError(f"PSNR needs equal shapes, got {cover.shape} and {stego.shape}.")
    if cover.size == 0:
        raise DimensionError("PSNR needs non-empty images.")
    mse = float(np.mean((cover - stego) ** 2))
    if mse == 0:
        return math.inf, 0.0
    peak = max(float(cover.max()), float(stego.max()))
    return 10 * math.log10(peak * peak / mse), mse


def ber(reference, recovered) -> float:
    reference = np.asarray(reference).ravel()
    recovered = np.asarray(recovered).ravel()
    if reference.size != recovered.size:
        raise DimensionError(f"BER needs equal lengths, got {reference.size} and {recovered.size}.")
    if reference.size == 0:
        raise DimensionError("BER needs at least one bit.")
    return float(np.count_nonzero(reference != recovered)) / reference.size
