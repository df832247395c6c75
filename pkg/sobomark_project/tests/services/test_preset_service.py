"""
Unit Tests for PresetService - lookup, basis cache and preset dumps.

Isolation: MockPresetRepository (no preset files)
Test Pattern: AAA (Arrange-Act-Assert)
"""

from dataclasses import replace

import pytest

from core.exceptions import PresetNotFoundError
from core.repositories.mock_preset_repository import MockPresetRepository
from core.services import PresetService
from tests.conftest import PRESETS


@pytest.fixture
def preset_service():
    return PresetService(repository=MockPresetRepository())


@pytest.mark.unit
class TestPresetLookup:

    def test_all_builtins_are_served(self, preset_service):
        assert [p.name for p in preset_service.get_all_presets()] == ['CS_I', 'CS_II', 'MS_I', 'MS_II']

    def test_unknown_preset(self, preset_service):
        with pytest.raises(PresetNotFoundError, match="Preset 'CS_X' not found"):
            preset_service.get_preset('CS_X')

    def test_resolve_accepts_names_and_presets(self, preset_service):
        assert preset_service.resolve('MS_I') is PRESETS['MS_I']
        assert preset_service.resolve(PRESETS['CS_II']) is PRESETS['CS_II']


@pytest.mark.unit
class TestBasisCache:

    def test_basis_is_built_once(self, shared_preset_service):
        first = shared_preset_service.get_basis('CS_I')

        assert shared_preset_service.get_basis(PRESETS['CS_I']) is first
        assert first.size == 8

    def test_presets_with_same_parameters_share_a_basis(self, shared_preset_service):
        """
        Arrange: a custom preset differing from CS_I only in its QIM step
        Act: Request both bases
        Assert: The same cached object is returned
        """
        # Arrange
        custom = replace(PRESETS['CS_I'], name='CS_I_STRONG', qim_delta=200, builtin=False)

        # Act & Assert
        assert shared_preset_service.get_basis(custom) is shared_preset_service.get_basis('CS_I')

    def test_basis_matches_direct_construction(self, shared_preset_service, preset_bases):
        assert (shared_preset_service.get_basis('MS_II').matrix == preset_bases['MS_II'].matrix).all()


@pytest.mark.unit
class TestPresetDump:

    def test_dump_all(self, preset_service):
        paths = preset_service.dump_presets('presets')

        assert paths == [f'presets/{name}.preset' for name in ('CS_I', 'CS_II', 'MS_I', 'MS_II')]

    def test_dump_one(self, preset_service):
        [path] = preset_service.dump_presets('presets', name='MS_I')

        assert 'gamma=4.1e-05' in preset_service.repository.dumped(path)
