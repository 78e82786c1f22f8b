"""Bundled diagrams and the knot table."""

from __future__ import annotations

import re
from pathlib import Path

from .diagram import KnotDiagram, parse_pd

FIXTURE_DIR = Path(__file__).with_name("fixtures")

KNOTATLAS = "8_21_knotatlas.pd"
KNOTATLAS_R3 = "8_21_knotatlas_r3.pd"
KNOTSCAPE = "8_21_knotscape.pd"
KNOT_TABLE = "knots_le8.csv"

_META = re.compile(r"^\s*#\s*([A-Za-z][\w-]*)\s*:\s*(.*?)\s*$")


def read_pd_file(path) -> tuple[KnotDiagram, dict[str, str]]:
    """Parse a PD file; ``# key: value`` comment lines are returned as metadata."""
    path = Path(path)
    text = path.read_text()
    meta = {}
    for line in text.splitlines():
        m = _META.match(line)
        if m:
            meta[m.group(1).lower()] = m.group(2)
    return parse_pd(text, name=path.stem), meta


def fixture_path(name: str, directory=None) -> Path:
    return Path(directory or FIXTURE_DIR) / name


def load_fixture(name: str, directory=None) -> KnotDiagram:
    return read_pd_file(fixture_path(name, directory))[0]


def r3_face(name: str = KNOTATLAS, directory=None) -> int:
    _, meta = read_pd_file(fixture_path(name, directory))
    if "r3-face" not in meta:
        raise KeyError(f"{name} records no 'r3-face'")
    return int(meta["r3-face"])
