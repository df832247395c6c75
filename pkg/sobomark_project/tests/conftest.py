"""
Pytest configuration and shared fixtures for all tests.
This file provides common test utilities and fixtures.
"""
import logging
import os
import sys

import django
import numpy as np
import pytest

# Add the project root to the Python path
project_root = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.path.join(project_root, '..'))

# Configure Django settings
os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'sobomark_project.settings')
django.setup()

# Import after Django setup
from core.models import ChaosKey, FamilyParams, KeyMaterial, SobolevParams
from core.numerics.momentbasis import build_basis
from core.numerics.sobolev import build_sobolev_family
from core.repositories.image_repository import ImageRepository
from core.repositories.mock_image_repository import MockImageRepository
from core.repositories.mock_key_repository import MockKeyRepository
from core.repositories.mock_preset_repository import MockPresetRepository
from core.repositories.preset_repository import BUILTIN_PRESETS
from core.services import PresetService, WatermarkService

PRESETS = {preset.name: preset for preset in BUILTIN_PRESETS}
PRESET_NAMES = tuple(PRESETS)

TEST_KAPPA = b'sobomark test key'
TEST_X0 = 0.3141592653589793
TEST_MU_C = 0.2718281828459045


# ============================================================================
# FAMILY FIXTURES
# ============================================================================

@pytest.fixture
def charlier_unit():
    """Charlier with mu = 1: small integer coefficients, easy hand checks."""
    return FamilyParams.charlier(1.0)


@pytest.fixture
def meixner_reference():
    """Meixner with gamma = 2, mu = 0.3."""
    return FamilyParams.meixner(0.3, 2.0)


@pytest.fixture(scope='session')
def stress_families():
    """Charlier mu = 1, alpha = -1, lam = 1 for j = 0, 1, 2 (lam no longer negligible)."""
    fam = FamilyParams.charlier(1.0)
    return {j: build_sobolev_family(fam, SobolevParams(-1.0, 1.0, j)) for j in (0, 1, 2)}


@pytest.fixture(scope='session')
def preset_families():
    """SobolevFamily per built-in preset."""
    return {name: build_sobolev_family(p.family_params(), p.sobolev_params()) for name, p in PRESETS.items()}


@pytest.fixture(scope='session')
def preset_bases(preset_families):
    """8x8 moment basis per built-in preset."""
    return {name: build_basis(sf, 8) for name, sf in preset_families.items()}


# ============================================================================
# IMAGE / KEY FIXTURES
# ============================================================================

def synthetic_cover(seed: int, shape=(512, 512, 3)) -> np.ndarray:
    """Uniform pixels in [64, 192); stays clear of clipping after embedding."""
    return np.random.default_rng(seed).integers(64, 192, size=shape, dtype=np.uint8)


def full_range_cover(seed: int, shape=(512, 512, 3)) -> np.ndarray:
    """Smooth waves over the whole byte range, saturated at 0 and 255 in places."""
    rng = np.random.default_rng(seed)
    rows, cols = np.mgrid[0:shape[0], 0:shape[1]]
    planes = []
    for _ in range(shape[2] if len(shape) == 3 else 1):
        fy, fx = rng.uniform(0.004, 0.03, size=2)
        wave = np.sin(2 * np.pi * (fy * rows + fx * cols) + rng.uniform(0, 2 * np.pi))
        planes.append(127.5 + 160.0 * wave + rng.normal(0.0, 4.0, size=rows.shape))
    cover = np.clip(np.rint(np.stack(planes, axis=-1)), 0, 255).astype(np.uint8)
    return cover if len(shape) == 3 else cover[..., 0]


def random_watermark(seed: int) -> np.ndarray:
    return np.random.default_rng(seed).integers(0, 2, size=(64, 64), dtype=np.uint8)


@pytest.fixture(scope='session')
def cover_rgb():
    cover = synthetic_cover(7)
    cover.setflags(write=False)
    return cover


@pytest.fixture(scope='session')
def watermark_bits():
    bits = random_watermark(11)
    bits.setflags(write=False)
    return bits


@pytest.fixture
def chaos_key():
    return ChaosKey(TEST_X0, TEST_MU_C)


@pytest.fixture
def key_material(chaos_key):
    return KeyMaterial(TEST_KAPPA, chaos_key)


# ============================================================================
# SERVICE FIXTURES (with Mock Repositories)
# ============================================================================

@pytest.fixture(scope='session')
def shared_preset_service():
    """PresetService over the mock repository; bases are cached for the whole session."""
    return PresetService(MockPresetRepository())


@pytest.fixture
def image_repository():
    return MockImageRepository()


@pytest.fixture
def key_repository():
    return MockKeyRepository()


@pytest.fixture
def watermark_service(image_repository, key_repository, shared_preset_service):
    return WatermarkService(image_repository, key_repository, shared_preset_service)


@pytest.fixture
def file_images():
    """The real Pillow-backed repository (tests pair it with tmp_path)."""
    return ImageRepository()


@pytest.fixture
def core_logs(caplog, monkeypatch):
    """caplog for the 'core' logger, which does not propagate to root in settings."""
    monkeypatch.setattr(logging.getLogger('core'), 'propagate', True)
    caplog.set_level(logging.DEBUG, logger='core')
    return caplog


# ============================================================================
# UTILITY FUNCTIONS
# ============================================================================

def assert_validation_error(error_message, expected_substring):
    """
    Helper to assert that a validation error contains expected message.

    Args:
        error_message: The actual error message
        expected_substring: The expected substring in the error
    """
    assert expected_substring.lower() in str(error_message).lower(), \
        f"Expected '{expected_substring}' in error message, got: {error_message}"


# ============================================================================
# PYTEST CONFIGURATION
# ============================================================================

def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "unit: Fast tests of one function or rule"
    )
    config.addinivalue_line(
        "markers", "integration: Tests that run the full pipeline or touch the file system"
    )
    config.addinivalue_line(
        "markers", "slow: Tests that take longer to run"
    )
