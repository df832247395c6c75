"""
Access to the SOBOMARK settings dict with built-in defaults.

Numerical modules read their tunables through sobomark_setting() so they
also work as a plain library when no Django settings are configured.
"""

import os

from django.conf import settings

DEFAULTS = {
    'N_MAX': 16,
    'DELTA_CD': 1e-6,
    'EPS_ID': 1e-9,
    'TAIL_TOLERANCE': 1e-18,
    'TAIL_RUN': 8,
    'TAIL_CAP': 10000,
    'EXTRA_DIGITS': 30,
    'BLOCK_SIZE': 8,
    'WATERMARK_SIDE': 64,
    'COEFF_INDEX': 28,
    'CHANNELS': 'blue',
    'FRAGILE_BITS': 16,
    'PWLCM_NUDGE': 1e-13,
    'PERMUTATION_BUDGET': 64,
    'THREADS': os.cpu_count() or 1,
    'PRESET_DIR': '',
}


def sobomark_setting(name: str):
    """Return settings.SOBOMARK[name], falling back to DEFAULTS."""
    if name not in DEFAULTS:
        raise KeyError(f"Unknown SOBOMARK setting '{name}'")
    if not settings.configured:
        return DEFAULTS[name]
    return getattr(settings, 'SOBOMARK', {}).get(name, DEFAULTS[name])
