"""
Unit Tests for presets - built-ins, preset files and lookups.

Rules Tested:
1. The four built-in presets and their parameters
2. Preset file parsing (required / optional / unknown fields)
3. Files cannot shadow built-ins
4. Unknown names raise PresetNotFoundError listing what is available

Test Pattern: AAA (Arrange-Act-Assert)
"""

import pytest

from core.exceptions import ParameterError, PresetNotFoundError
from core.models import Preset
from core.repositories.mock_preset_repository import MockPresetRepository
from core.repositories.preset_repository import (
    BUILTIN_PRESETS, PresetRepository, format_preset, parse_preset_text,
)
from tests.conftest import PRESETS


CUSTOM_PRESET = """
name=CS_TEST
family=Charlier
mu=0.001
lam=1e-40
alpha=-12
j=2
qim_delta=100
"""


@pytest.mark.unit
class TestBuiltinPresets:

    def test_four_presets(self):
        assert [p.name for p in BUILTIN_PRESETS] == ['CS_I', 'CS_II', 'MS_I', 'MS_II']
        assert all(p.builtin for p in BUILTIN_PRESETS)

    def test_meixner_presets_carry_gamma(self):
        assert PRESETS['MS_I'].family_params().gamma == 0.000041
        assert PRESETS['MS_II'].family_params().gamma == 0.000075
        assert PRESETS['CS_I'].gamma is None

    def test_sobolev_parameters(self):
        sob = PRESETS['CS_II'].sobolev_params()

        assert (sob.alpha, sob.lam, sob.j) == (-21, 1e-77, 3)

    def test_qim_config_uses_preset_step(self):
        cfg = PRESETS['MS_I'].qim_config()

        assert (cfg.delta, cfg.coeff_index, cfg.channel_policy) == (90, 28, 'blue')

    def test_qim_overrides_ignore_none(self):
        cfg = PRESETS['CS_I'].qim_config(delta=None, coeff_index=20)

        assert (cfg.delta, cfg.coeff_index) == (120, 20)

    def test_gamma_only_for_meixner(self):
        with pytest.raises(ParameterError, match="gamma is only valid for Meixner"):
            Preset('BAD', 'charlier', mu=0.1, lam=1.0, alpha=-1, j=1, qim_delta=10, gamma=0.5)


@pytest.mark.unit
class TestPresetText:

    def test_parse_custom_preset(self):
        preset = parse_preset_text(CUSTOM_PRESET)

        assert preset.name == 'CS_TEST'
        assert preset.family == 'charlier'
        assert preset.coeff_index == 28
        assert not preset.builtin

    def test_missing_required_field(self):
        with pytest.raises(ParameterError, match="missing qim_delta"):
            parse_preset_text(CUSTOM_PRESET.replace("qim_delta=100", ""))

    def test_unknown_field(self):
        with pytest.raises(ParameterError, match="unknown keys colour"):
            parse_preset_text(CUSTOM_PRESET + "colour=blue\n")

    def test_non_numeric_value(self):
        with pytest.raises(ParameterError, match="could not convert"):
            parse_preset_text(CUSTOM_PRESET.replace("mu=0.001", "mu=small"))

    @pytest.mark.parametrize('preset', BUILTIN_PRESETS, ids=lambda p: p.name)
    def test_format_then_parse_keeps_values(self, preset):
        assert parse_preset_text(format_preset(preset)).as_dict() == preset.as_dict()


@pytest.mark.integration
class TestPresetRepositoryFiles:

    def test_file_presets_are_loaded(self, tmp_path):
        (tmp_path / 'CS_TEST.preset').write_text(CUSTOM_PRESET, encoding='utf-8')

        repository = PresetRepository(str(tmp_path))

        assert repository.get('CS_TEST').lam == 1e-40
        assert len(repository.get_all()) == 5

    def test_files_cannot_shadow_builtins(self, tmp_path, core_logs):
        """
        Arrange: a file named CS_I with a different step
        Act: Look up CS_I
        Assert: The built-in wins and a warning is logged
        """
        # Arrange
        (tmp_path / 'CS_I.preset').write_text(CUSTOM_PRESET.replace("CS_TEST", "CS_I"), encoding='utf-8')

        # Act
        preset = PresetRepository(str(tmp_path)).get('CS_I')

        # Assert
        assert preset.qim_delta == 120
        assert preset.builtin
        assert "cannot replace built-in CS_I" in core_logs.text

    def test_unknown_name_lists_available(self):
        with pytest.raises(PresetNotFoundError, match="available: CS_I, CS_II, MS_I, MS_II"):
            PresetRepository('').get('CS_III')

    def test_missing_directory_only_warns(self, tmp_path, core_logs):
        repository = PresetRepository(str(tmp_path / 'absent'))

        assert len(repository.get_all()) == 4
        assert "does not exist" in core_logs.text

    def test_dump_writes_loadable_file(self, tmp_path):
        repository = PresetRepository('')

        path = repository.dump(PRESETS['MS_II'], tmp_path / 'out')

        assert path.name == 'MS_II.preset'
        assert parse_preset_text(path.read_text()).as_dict() == PRESETS['MS_II'].as_dict()

    def test_mock_repository_records_dumps(self):
        repository = MockPresetRepository()

        path = repository.dump(PRESETS['CS_I'], 'presets/')

        assert path == 'presets/CS_I.preset'
        assert repository.dumped(path).startswith("name=CS_I\n")
        assert repository.count() == 4
