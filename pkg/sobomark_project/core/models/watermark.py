"""
Watermark payload, chaotic key, QIM configuration and extraction result.

Business Rules:
1. ChaosKey: 0 < x0 < 1, 0 < mu_c < 0.5, x0 not in {mu_c, 0.5}.
2. WatermarkPayload: robust bits form a side x side {0,1} matrix; the
   fragile signature is the first 16 bits of SHA-256(kappa), most
   significant bit first.
3. QimConfig: delta > 0 and 0 <= coeff_index < N^2.
"""

import hashlib
from dataclasses import dataclass, field

import numpy as np
from django.db import models

from core.conf import sobomark_setting
from core.exceptions import ParameterError, DimensionError


class ChannelPolicy(models.TextChoices):
    BLUE = 'blue', 'Blue channel only'
    ALL = 'all', 'All channels, majority vote'


@dataclass(frozen=True)
class ChaosKey:
    x0: float
    mu_c: float

    def __post_init__(self):
        if not 0 < self.x0 < 1:
            raise ParameterError("ChaosKey.x0 must lie in (0, 1).")
        if not 0 < self.mu_c < 0.5:
            raise ParameterError("ChaosKey.mu_c must lie in (0, 0.5).")
        if self.x0 in (self.mu_c, 0.5):
            raise ParameterError("ChaosKey.x0 must not sit on a map breakpoint (mu_c or 0.5).")

    def describe(self) -> dict:
        """Full-precision echo of the key for reports."""
        return {'x0': repr(self.x0), 'mu_c': repr(self.mu_c)}


def fragile_signature(kappa: bytes, bits: int = None) -> np.ndarray:
    """First `bits` bits of SHA-256(kappa), MSB first."""
    bits = bits or sobomark_setting('FRAGILE_BITS')
    digest = np.frombuffer(hashlib.sha256(kappa).digest(), dtype=np.uint8)
    return np.unpackbits(digest)[:bits].astype(np.uint8)


@dataclass(frozen=True, eq=False)
class WatermarkPayload:
    robust_bits: np.ndarray
    key_kappa: bytes
    fragile_sig: np.ndarray = field(init=False)

    def __post_init__(self):
        side = sobomark_setting('WATERMARK_SIDE')
        bits = np.asarray(self.robust_bits)
        if bits.shape != (side, side):
            raise DimensionError(
                f"WatermarkPayload.robust_bits must be {side}x{side}, got {bits.shape}."
            )
        if not np.isin(bits, (0, 1)).all():
            raise ParameterError("WatermarkPayload.robust_bits entries must be 0 or 1.")
        if isinstance(self.key_kappa, str):
            object.__setattr__(self, 'key_kappa', self.key_kappa.encode('utf-8'))
        bits = bits.astype(np.uint8)
        bits.setflags(write=False)
        object.__setattr__(self, 'robust_bits', bits)
        signature = fragile_signature(self.key_kappa)
        signature.setflags(write=False)
        object.__setattr__(self, 'fragile_sig', signature)


@dataclass(frozen=True)
class QimConfig:
    delta: float
    coeff_index: int = 28
    channel_policy: str = ChannelPolicy.BLUE
    block_size: int = 8

    def __post_init__(self):
        if not self.delta > 0:
            raise ParameterError("QimConfig.delta must be positive.")
        if not 0 <= self.coeff_index < self.block_size ** 2:
            raise ParameterError(
                f"QimConfig.coeff_index must lie in 0..{self.block_size ** 2 - 1}."
            )
        if self.channel_policy not in ChannelPolicy.values:
            raise ParameterError(
                f"QimConfig.channel_policy must be one of {', '.join(ChannelPolicy.values)}."
            )
        object.__setattr__(self, 'channel_policy', ChannelPolicy(self.channel_policy).value)


@dataclass(frozen=True, eq=False)
class ExtractionResult:
    """Recovered robust bits plus the per-block fragile verdict (True = tampered)."""
    robust_bits: np.ndarray
    authentic: bool
    tamper_map: np.ndarray

    @property
    def tampered_blocks(self) -> int:
        return int(np.count_nonzero(self.tamper_map))


@dataclass(frozen=True)
class KeyMaterial:
    """Everything a key file holds: the fragile secret and the chaos key."""
    kappa: bytes
    chaos: ChaosKey

    def __post_init__(self):
        if isinstance(self.kappa, str):
            object.__setattr__(self, 'kappa', self.kappa.encode('utf-8'))
        if not self.kappa:
            raise ParameterError("KeyMaterial.kappa must not be empty.")

    def with_chaos(self, x0: float = None, mu_c: float = None) -> 'KeyMaterial':
        """Copy with the chaos parameters overridden where given."""
        if x0 is None and mu_c is None:
            return self
        chaos = ChaosKey(x0 if x0 is not None else self.chaos.x0,
                         mu_c if mu_c is not None else self.chaos.mu_c)
        return KeyMaterial(self.kappa, chaos)
