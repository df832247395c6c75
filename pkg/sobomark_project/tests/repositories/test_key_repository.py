"""
Unit Tests for key files - parsing rules and file round trips.

Rules Tested:
1. kappa, x0 and mu_c are required; unknown keys are rejected
2. kappa is UTF-8 text or hex:-prefixed raw bytes
3. Chaos parameters are validated by ChaosKey
4. Saved keys load back unchanged, with floats at full precision

Test Pattern: AAA (Arrange-Act-Assert)
"""

import pytest

from core.exceptions import KeyFileError, ParameterError
from core.models import ChaosKey, KeyMaterial
from core.repositories.key_repository import KeyRepository, format_key, parse_key_text
from core.repositories.mock_key_repository import MockKeyRepository
from tests.conftest import TEST_KAPPA, TEST_MU_C, TEST_X0


VALID_KEY = """
# test key
kappa=sobomark test key
x0=0.3141592653589793
mu_c=0.2718281828459045
"""


@pytest.mark.unit
class TestKeyParsingRules:

    def test_valid_key_text(self):
        """
        Arrange: key text with a comment and blank lines
        Act: Parse
        Assert: KeyMaterial with UTF-8 kappa and exact floats
        """
        # Act
        material = parse_key_text(VALID_KEY)

        # Assert
        assert material.kappa == TEST_KAPPA
        assert material.chaos == ChaosKey(TEST_X0, TEST_MU_C)

    def test_hex_kappa_gives_raw_bytes(self):
        material = parse_key_text("kappa=hex:00ff10\nx0=0.4\nmu_c=0.2\n")

        assert material.kappa == b'\x00\xff\x10'

    def test_missing_field(self):
        with pytest.raises(KeyFileError, match="missing mu_c"):
            parse_key_text("kappa=abc\nx0=0.4\n")

    def test_unknown_field(self):
        with pytest.raises(KeyFileError, match="unknown keys seed"):
            parse_key_text("kappa=abc\nx0=0.4\nmu_c=0.2\nseed=3\n")

    def test_duplicate_field(self):
        with pytest.raises(KeyFileError, match="duplicate key 'x0'"):
            parse_key_text("kappa=abc\nx0=0.4\nx0=0.5\nmu_c=0.2\n")

    def test_line_without_separator(self):
        with pytest.raises(KeyFileError, match=":2: expected key=value"):
            parse_key_text("kappa=abc\nx0 0.4\nmu_c=0.2\n")

    def test_bad_hex(self):
        with pytest.raises(KeyFileError, match="not valid hex"):
            parse_key_text("kappa=hex:zz\nx0=0.4\nmu_c=0.2\n")

    def test_non_numeric_chaos_parameter(self):
        with pytest.raises(KeyFileError, match="real numbers"):
            parse_key_text("kappa=abc\nx0=zero\nmu_c=0.2\n")

    def test_chaos_parameters_out_of_range(self):
        with pytest.raises(ParameterError, match="mu_c must lie in"):
            parse_key_text("kappa=abc\nx0=0.4\nmu_c=0.6\n")

    def test_empty_kappa(self):
        with pytest.raises(ParameterError, match="must not be empty"):
            parse_key_text("kappa=\nx0=0.4\nmu_c=0.2\n")

    def test_kappa_may_contain_equals_sign(self):
        assert parse_key_text("kappa=a=b\nx0=0.4\nmu_c=0.2\n").kappa == b'a=b'


@pytest.mark.unit
class TestKeyFormatting:

    def test_text_kappa_stays_text(self, key_material):
        assert format_key(key_material).startswith("kappa=sobomark test key\n")

    @pytest.mark.parametrize('kappa', [b'\xff\xfe', b' padded', b'hex:abc', b'tab\there'])
    def test_unsafe_kappa_is_written_as_hex(self, kappa):
        material = KeyMaterial(kappa, ChaosKey(0.4, 0.2))

        text = format_key(material)

        assert text.startswith("kappa=hex:")
        assert parse_key_text(text).kappa == kappa

    def test_with_chaos_overrides_only_given_fields(self, key_material):
        changed = key_material.with_chaos(mu_c=0.1)

        assert changed.chaos == ChaosKey(TEST_X0, 0.1)
        assert changed.kappa == key_material.kappa
        assert key_material.with_chaos() is key_material


@pytest.mark.integration
class TestKeyRepositoryFiles:

    def test_save_then_load(self, tmp_path, key_material):
        repository = KeyRepository()
        path = tmp_path / 'owner.key'

        repository.save(path, key_material)

        assert repository.load(path) == key_material

    def test_missing_file(self, tmp_path):
        with pytest.raises(KeyFileError, match="Cannot read key file"):
            KeyRepository().load(tmp_path / 'absent.key')

    def test_mock_repository_serves_test_key(self, key_material):
        repository = MockKeyRepository()

        assert repository.load('test.key') == key_material
        repository.clear()
        with pytest.raises(KeyFileError, match="not found"):
            repository.load('test.key')
