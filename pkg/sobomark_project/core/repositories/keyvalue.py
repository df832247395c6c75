"""
key=value text format shared by key files and preset files.

Blank lines and lines starting with '#' are ignored; keys are
case-sensitive; a repeated key is an error.
"""

from typing import Dict


def parse_key_values(text: str, source: str, error_class) -> Dict[str, str]:
    values = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        key, sep, value = line.partition('=')
        key = key.strip()
        if not sep or not key:
            raise error_class(f"{source}:{number}: expected key=value, got '{line}'.")
        if key in values:
            raise error_class(f"{source}:{number}: duplicate key '{key}'.")
        values[key] = value.strip()
    return values


def format_key_values(values: Dict[str, object]) -> str:
    return ''.join(f"{key}={value}\n" for key, value in values.items())
