"""
Dual robust / fragile watermarking on moment-domain image blocks.

Embedding:
1. scramble the robust bits with the PWLCM permutation of the chaos key
2. per carrying block: direct moments, QIM on the coefficient at zigzag
   position coeff_index, inverse moments
3. finalize pixels (round half away from zero, clip to [0, 255])
4. per block and channel: write the 16-bit fragile signature into the
   LSBs of the first 16 zigzag-ordered pixels

Extraction reverses step 2 on the carrying blocks, unscrambles, and checks
every block's LSB signature. The tamper map is always complete (no early
exit on the first failing block).
"""

import logging
import math
from functools import lru_cache
from typing import Tuple

import numpy as np

from core.conf import sobomark_setting
from core.exceptions import (
    CapacityError, DegenerateKeyError, DimensionError, DomainError, ImageFormatError, SizeError,
)
from core.models.basis import MomentBasis
from core.models.watermark import ChannelPolicy, ChaosKey, ExtractionResult, QimConfig, WatermarkPayload, fragile_signature
from core.numerics.momentbasis import direct_moments, inverse_moments

logger = logging.getLogger(__name__)


# ============================================================================
# CHAOTIC SCRAMBLER
# ============================================================================

def pwlcm_next(x: float, mu_c: float) -> float:
    """
    One step of the piecewise linear chaotic map

        F(x) = x / mu_c                    on (0, mu_c]
               (x - mu_c) / (0.5 - mu_c)   on (mu_c, 0.5]
               F(1 - x)                    on (0.5, 1)

    Outputs of exactly 0 or 1 are nudged into the open interval.
    """
    if not 0 < x < 1:
        raise DomainError(f"PWLCM iterate must lie in (0, 1), got {x!r}.")
    if x > 0.5:
        x = 1 - x
    if x <= mu_c:
        y = x / mu_c
    else:
        y = (x - mu_c) / (0.5 - mu_c)
    nudge = sobomark_setting('PWLCM_NUDGE')
    if y <= 0:
        logger.debug("PWLCM orbit hit 0; nudged by %g", nudge)
        y = nudge
    elif y >= 1:
        logger.debug("PWLCM orbit hit 1; nudged by %g", nudge)
        y = 1 - nudge
    return y


@lru_cache(maxsize=64)
def _permutation(key: ChaosKey, n: int) -> Tuple[int, ...]:
    budget = sobomark_setting('PERMUTATION_BUDGET') * n
    seen = np.zeros(n, dtype=bool)
    order = []
    x = key.x0
    for _ in range(budget):
        x = pwlcm_next(x, key.mu_c)
        index = math.floor(x * 1e14) % n
        if not seen[index]:
            seen[index] = True
            order.append(index)
            if len(order) == n:
                return tuple(order)
    raise DegenerateKeyError(
        f"ChaosKey(x0={key.x0!r}, mu_c={key.mu_c!r}) produced only {len(order)} of {n} "
        f"indices within {budget} map steps."
    )


def chaotic_permutation(key: ChaosKey, n: int) -> np.ndarray:
    """
    Bijection of {0, ..., n-1}: floor(x_k 1e14) mod n over the orbit, with
    repeated indices skipped.

    Raises:
        DegenerateKeyError: PERMUTATION_BUDGET * n steps did not reach n indices
    """
    if n < 1:
        raise DimensionError("Permutation length must be at least 1.")
    return np.array(_permutation(key, n), dtype=np.intp)


def scramble(bits, key: ChaosKey) -> np.ndarray:
    bits = np.asarray(bits)
    permutation = chaotic_permutation(key, bits.size)
    return bits.ravel()[permutation].reshape(bits.shape)


def unscramble(bits, key: ChaosKey) -> np.ndarray:
    bits = np.asarray(bits)
    permutation = chaotic_permutation(key, bits.size)
    restored = np.empty(bits.size, dtype=bits.dtype)
    restored[permutation] = bits.ravel()
    return restored.reshape(bits.shape)


# ============================================================================
# ZIGZAG
# ============================================================================

@lru_cache(maxsize=16)
def zigzag_order(size: int) -> Tuple[np.ndarray, np.ndarray]:
    """(rows, cols) of the JPEG zigzag scan of a size x size block."""
    rows, cols = [], []
    for s in range(2 * size - 1):
        low, high = max(0, s - size + 1), min(s, size - 1)
        diagonal = range(low, high + 1)
        # odd diagonals run top-right to bottom-left, even ones the other way
        for r in (diagonal if s % 2 else reversed(diagonal)):
            rows.append(r)
            cols.append(s - r)
    rows, cols = np.array(rows), np.array(cols)
    rows.setflags(write=False)
    cols.setflags(write=False)
    return rows, cols


def zigzag(block) -> np.ndarray:
    """Zigzag vector of the trailing N x N axes."""
    block = np.asarray(block)
    if block.ndim < 2 or block.shape[-1] != block.shape[-2]:
        raise DimensionError(f"Zigzag needs square blocks, got {block.shape}.")
    rows, cols = zigzag_order(block.shape[-1])
    return block[..., rows, cols]


def inverse_zigzag(vector) -> np.ndarray:
    vector = np.asarray(vector)
    size = math.isqrt(vector.shape[-1])
    if size * size != vector.shape[-1]:
        raise DimensionError(f"Zigzag vector length {vector.shape[-1]} is not a square.")
    rows, cols = zigzag_order(size)
    block = np.empty(vector.shape[:-1] + (size, size), dtype=vector.dtype)
    block[..., rows, cols] = vector
    return block


def coefficient_position(cfg: QimConfig) -> Tuple[int, int]:
    rows, cols = zigzag_order(cfg.block_size)
    return int(rows[cfg.coeff_index]), int(cols[cfg.coeff_index])


# ============================================================================
# DITHER MODULATION
# ============================================================================

def qim_embed(coef, bit, cfg: QimConfig):
    """Quantize onto the lattice delta Z + d_bit with d_0 = 0, d_1 = delta / 2."""
    delta = cfg.delta
    dither = np.asarray(bit) * (delta / 2)
    quantized = delta * np.floor((np.asarray(coef) - dither) / delta + 0.5) + dither
    return float(quantized) if np.ndim(quantized) == 0 else quantized


def qim_extract(coef, cfg: QimConfig):
    """Bit of the nearest dither lattice; exact ties resolve to 0."""
    coef = np.asarray(coef, dtype=np.float64)
    distance0 = np.abs(coef - qim_embed(coef, 0, cfg))
    distance1 = np.abs(coef - qim_embed(coef, 1, cfg))
    bits = (distance1 < distance0).astype(np.uint8)
    return int(bits) if bits.ndim == 0 else bits


# ============================================================================
# BLOCKS AND PIXELS
# ============================================================================

def _as_channels(image) -> np.ndarray:
    image = np.asarray(image)
    if image.ndim == 2:
        return image[..., np.newaxis]
    if image.ndim == 3:
        return image
    raise ImageFormatError(f"Images must be H x W or H x W x C arrays, got shape {image.shape}.")


def split_blocks(channel: np.ndarray, size: int) -> np.ndarray:
    """(H, W) -> (H/N * W/N, N, N) in row-major block order."""
    height, width = channel.shape
    blocks = channel.reshape(height // size, size, width // size, size).swapaxes(1, 2)
    return blocks.reshape(-1, size, size)


def merge_blocks(blocks: np.ndarray, height: int, width: int) -> np.ndarray:
    size = blocks.shape[-1]
    grid = blocks.reshape(height // size, width // size, size, size).swapaxes(1, 2)
    return grid.reshape(height, width)


def finalize_pixels(values) -> np.ndarray:
    """Round half away from zero, clip to [0, 255], cast to bytes."""
    values = np.asarray(values, dtype=np.float64)
    rounded = np.where(values >= 0, np.floor(values + 0.5), np.ceil(values - 0.5))
    return np.clip(rounded, 0, 255).astype(np.uint8)


def _robust_channels(channel_count: int, cfg: QimConfig) -> list:
    if cfg.channel_policy == ChannelPolicy.ALL:
        return list(range(channel_count))
    return [2 if channel_count >= 3 else 0]


def _check_layout(image: np.ndarray, basis: MomentBasis, cfg: QimConfig) -> int:
    size = basis.size
    if size != cfg.block_size:
        raise DimensionError(f"Basis size {size} does not match QimConfig.block_size {cfg.block_size}.")
    height, width = image.shape[:2]
    if height % size or width % size:
        raise SizeError(f"size error: image {width}x{height} is not a multiple of the {size}x{size} block.")
    needed = sobomark_setting('WATERMARK_SIDE') ** 2
    available = (height // size) * (width // size)
    if available < needed:
        raise CapacityError(
            f"capacity error: image {width}x{height} has {available} blocks, {needed} are required."
        )
    if sobomark_setting('FRAGILE_BITS') > size * size:
        raise SizeError(f"size error: {size}x{size} blocks cannot hold the fragile signature.")
    return needed


def _sign_blocks(blocks: np.ndarray, signature: np.ndarray) -> np.ndarray:
    vectors = zigzag(blocks)
    count = signature.size
    vectors[..., :count] = (vectors[..., :count] & 0xFE) | signature
    return inverse_zigzag(vectors)


def _write_signature(pixels: np.ndarray, signature: np.ndarray, size: int) -> None:
    height, width = pixels.shape[:2]
    for channel in range(pixels.shape[2]):
        blocks = split_blocks(pixels[..., channel], size)
        pixels[..., channel] = merge_blocks(_sign_blocks(blocks, signature), height, width)


# Range compression steps towards mid-gray for blocks whose QIM shift clips
CLIP_SCALES = (1.0, 0.9, 0.8, 0.7, 0.6, 0.5)
CLIP_ITERATIONS = 4
MID_GRAY = 127.5


def _settle_block(cover_block: np.ndarray, bit: int, basis: MomentBasis, cfg: QimConfig,
                  signature: np.ndarray, row: int, col: int) -> np.ndarray:
    """
    Final pixels of one carrying block whose bit reads back after rounding,
    clipping and the LSB signature.

    QIM is repeated on its own finalized output; when that does not settle,
    the cover block is pulled towards mid-gray first. At scale 0.5 a shift
    of at most delta / 2 per pixel stays inside [0, 255].
    """
    candidate = None
    for scale in CLIP_SCALES:
        current = MID_GRAY + scale * (cover_block - MID_GRAY)
        for _ in range(CLIP_ITERATIONS):
            moments = direct_moments(basis, current)
            moments[row, col] = qim_embed(moments[row, col], bit, cfg)
            candidate = _sign_blocks(finalize_pixels(inverse_moments(basis, moments)), signature)
            if qim_extract(direct_moments(basis, candidate)[row, col], cfg) == bit:
                return candidate
            current = candidate.astype(np.float64)
    logger.warning("Carrying block did not settle on bit %d after range compression", bit)
    return candidate


def _repair_clipped_blocks(cover_channel: np.ndarray, stego_channel: np.ndarray, bits: np.ndarray,
                           basis: MomentBasis, cfg: QimConfig, signature: np.ndarray) -> np.ndarray:
    """Re-embed the carrying blocks of one channel whose bit does not read back."""
    size = basis.size
    height, width = stego_channel.shape
    row, col = coefficient_position(cfg)
    blocks = split_blocks(stego_channel, size).copy()
    read = qim_extract(direct_moments(basis, blocks[:bits.size])[:, row, col], cfg)
    failing = np.flatnonzero(read != bits)
    if not failing.size:
        return stego_channel
    covers = split_blocks(cover_channel.astype(np.float64), size)
    for index in failing:
        blocks[index] = _settle_block(covers[index], int(bits[index]), basis, cfg, signature, row, col)
    logger.info("Re-embedded %d carrying blocks that lost their bit to clipping", failing.size)
    return merge_blocks(blocks, height, width)


def embed(cover, payload: WatermarkPayload, basis: MomentBasis, key: ChaosKey, cfg: QimConfig) -> np.ndarray:
    """
    Embed the robust bits and the fragile signature into a cover image.

    Raises:
        SizeError: sides are not multiples of the block size
        CapacityError: fewer blocks than robust bits
    """
    image = _as_channels(cover)
    needed = _check_layout(image, basis, cfg)
    size = basis.size
    height, width = image.shape[:2]
    bits = scramble(payload.robust_bits, key).ravel()
    row, col = coefficient_position(cfg)

    work = image.astype(np.float64)
    for channel in _robust_channels(image.shape[2], cfg):
        blocks = split_blocks(work[..., channel], size).copy()
        moments = direct_moments(basis, blocks[:needed])
        moments[:, row, col] = qim_embed(moments[:, row, col], bits, cfg)
        blocks[:needed] = inverse_moments(basis, moments)
        work[..., channel] = merge_blocks(blocks, height, width)

    pixels = finalize_pixels(work)
    _write_signature(pixels, payload.fragile_sig, size)
    for channel in _robust_channels(image.shape[2], cfg):
        pixels[..., channel] = _repair_clipped_blocks(image[..., channel], pixels[..., channel], bits[:needed],
                                                      basis, cfg, payload.fragile_sig)
    logger.info("Embedded %d robust bits (delta=%g, coeff %d, %s) into %dx%dx%d image",
                needed, cfg.delta, cfg.coeff_index, cfg.channel_policy, width, height, image.shape[2])
    return pixels.reshape(np.shape(cover))


def extract(watermarked, basis: MomentBasis, key: ChaosKey, cfg: QimConfig, kappa: bytes) -> ExtractionResult:
    """
    Recover the robust bits and check every block's fragile signature.

    Raises:
        SizeError / CapacityError: as for embed
    """
    image = _as_channels(watermarked)
    needed = _check_layout(image, basis, cfg)
    if not np.issubdtype(image.dtype, np.integer):
        raise ImageFormatError("Watermarked images must hold integer pixel values.")
    size = basis.size
    height, width = image.shape[:2]
    row, col = coefficient_position(cfg)
    side = sobomark_setting('WATERMARK_SIDE')

    votes = []
    for channel in _robust_channels(image.shape[2], cfg):
        blocks = split_blocks(image[..., channel].astype(np.float64), size)
        moments = direct_moments(basis, blocks[:needed])
        votes.append(qim_extract(moments[:, row, col], cfg))
    votes = np.array(votes)
    scrambled = (2 * votes.sum(axis=0) > votes.shape[0]).astype(np.uint8)
    robust = unscramble(scrambled.reshape(side, side), key)

    if isinstance(kappa, str):
        kappa = kappa.encode('utf-8')
    signature = fragile_signature(kappa)
    tampered = np.zeros((height // size) * (width // size), dtype=bool)
    for channel in range(image.shape[2]):
        vectors = zigzag(split_blocks(image[..., channel], size))
        lsbs = (vectors[:, :signature.size] & 1).astype(np.uint8)
        tampered |= (lsbs != signature).any(axis=1)
    tamper_map = tampered.reshape(height // size, width // size)
    authentic = not tamper_map.any()
    if not authentic:
        logger.warning("Fragile check failed on %d of %d blocks", tamper_map.sum(), tamper_map.size)
    return ExtractionResult(robust_bits=robust, authentic=authentic, tamper_map=tamper_map)


def tamper_map_image(tamper_map: np.ndarray, scale: int = 1) -> np.ndarray:
    """Block grid image: passing blocks white, tampered blocks black."""
    grid = np.where(np.asarray(tamper_map, dtype=bool), 0, 255).astype(np.uint8)
    if scale > 1:
        grid = np.kron(grid, np.ones((scale, scale), dtype=np.uint8))
    return grid
