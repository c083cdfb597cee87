"""
Curve input files.

One assignment per line, `key = "expression"`, with `#` starting a comment:

    # cusp with its Saito basis
    f        = "y^2 - x^3"
    omega1.A = "3*y"
    omega1.B = "-2*x"
    omega2.A = "-3*x^2"
    omega2.B = "2*y"
"""
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Union

from exceptions import CurveFileError
from models.models import OneForm
from models.polynomial import Poly

CURVE_FILE_KEYS = ('f', 'omega1.A', 'omega1.B', 'omega2.A', 'omega2.B')

_LINE_PATTERN = re.compile(r'^\s*(?P<key>[\w.]+)\s*=\s*"(?P<value>[^"]*)"\s*$')


@dataclass(frozen=True)
class CurveFile:
    f: Poly
    omega1: Optional[OneForm] = None
    omega2: Optional[OneForm] = None

    @property
    def has_basis(self) -> bool:
        return self.omega1 is not None and self.omega2 is not None


def _strip_comment(line: str) -> str:
    # '#' never occurs inside an expression
    return line.split('#', 1)[0]


def parse_curve_text(text: str, source: str = '<string>') -> Dict[str, str]:
    entries: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        match = _LINE_PATTERN.match(line)
        if not match:
            raise CurveFileError(f'{source}:{number}: expected key = "expression"')
        key = match.group('key')
        if key not in CURVE_FILE_KEYS:
            raise CurveFileError(f"{source}:{number}: unknown key {key!r}")
        if key in entries:
            raise CurveFileError(f"{source}:{number}: duplicate key {key!r}")
        entries[key] = match.group('value')
    return entries


def read_curve_file(path: Union[str, Path]) -> Dict[str, str]:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise CurveFileError(f"cannot read curve file {path}: {e.strerror or e}") from e
    return parse_curve_text(text, source=str(path))
