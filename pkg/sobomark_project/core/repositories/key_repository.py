"""
Key Repository

Reads and writes watermark key files:

    # comment
    kappa=my secret          (UTF-8 text, or hex:0a1b... for raw bytes)
    x0=0.3141592653589793
    mu_c=0.2718281828459045
"""

import binascii
from pathlib import Path

from core.exceptions import KeyFileError
from core.models.watermark import ChaosKey, KeyMaterial
from core.repositories.keyvalue import format_key_values, parse_key_values

HEX_PREFIX = 'hex:'
KEY_FIELDS = ('kappa', 'x0', 'mu_c')


def parse_key_text(text: str, source: str = '<key>') -> KeyMaterial:
    values = parse_key_values(text, source, KeyFileError)
    missing = [name for name in KEY_FIELDS if name not in values]
    if missing:
        raise KeyFileError(f"{source}: missing {', '.join(missing)}.")
    unknown = sorted(set(values) - set(KEY_FIELDS))
    if unknown:
        raise KeyFileError(f"{source}: unknown keys {', '.join(unknown)}.")

    kappa = values['kappa']
    if kappa.startswith(HEX_PREFIX):
        try:
            kappa = binascii.unhexlify(kappa[len(HEX_PREFIX):])
        except (binascii.Error, ValueError):
            raise KeyFileError(f"{source}: kappa is not valid hex.")
    else:
        kappa = kappa.encode('utf-8')
    try:
        x0, mu_c = float(values['x0']), float(values['mu_c'])
    except ValueError:
        raise KeyFileError(f"{source}: x0 and mu_c must be real numbers.")
    return KeyMaterial(kappa=kappa, chaos=ChaosKey(x0, mu_c))


def _text_kappa(kappa: bytes):
    try:
        text = kappa.decode('utf-8')
    except UnicodeDecodeError:
        return None
    if text != text.strip() or text.startswith(HEX_PREFIX) or not text.isprintable():
        return None
    return text


def format_key(material: KeyMaterial) -> str:
    kappa = _text_kappa(material.kappa)
    if kappa is None:
        kappa = HEX_PREFIX + material.kappa.hex()
    return format_key_values({'kappa': kappa, 'x0': repr(material.chaos.x0), 'mu_c': repr(material.chaos.mu_c)})


class KeyRepository:
    """File access for key material"""

    def load(self, path) -> KeyMaterial:
        path = Path(path)
        try:
            text = path.read_text(encoding='utf-8')
        except (OSError, UnicodeDecodeError) as exc:
            raise KeyFileError(f"Cannot read key file {path}: {exc}")
        return parse_key_text(text, str(path))

    def save(self, path, material: KeyMaterial) -> None:
        Path(path).write_text(format_key(material), encoding='utf-8')
