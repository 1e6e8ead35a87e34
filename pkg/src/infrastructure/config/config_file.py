"""
Reader for key=value configuration files

Blank lines and lines starting with '#' are ignored. Keys are lower-cased
with '-' mapped to '_' so they line up with command-line flag names.
"""
from typing import Dict

from src.domain.exceptions import ConfigurationError


def parse_options(text: str) -> Dict[str, str]:
    options: Dict[str, str] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, separator, value = line.partition("=")
        if not separator or not key.strip():
            raise ConfigurationError(f"line {line_number}: expected key=value, got {raw!r}")
        options[key.strip().lower().replace("-", "_")] = value.strip()
    return options


def read_options(file_path: str) -> Dict[str, str]:
    try:
        with open(file_path, encoding="utf-8") as handle:
            return parse_options(handle.read())
    except OSError as error:
        raise ConfigurationError(f"cannot read config file {file_path}: {error}") from None
