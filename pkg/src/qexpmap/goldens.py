"""Golden-file regression support: record and byte-compare deterministic JSON
serializations of the reference matrices."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from . import expmap
from .render import matrix_json

HALF = Fraction(1, 2)

GOLDEN_BUILDERS = {
    "t_defining": lambda: expmap.t_matrix_closed(HALF, HALF, "symmetric"),
    "t_1_half": lambda: expmap.t_matrix_closed(1, HALF, "symmetric"),
    "l_plus_half": lambda: expmap.l_matrix("+", HALF, "symmetric"),
    "l_minus_half": lambda: expmap.l_matrix("-", HALF, "symmetric"),
    "l_plus_1": lambda: expmap.l_matrix("+", 1, "symmetric"),
    "l_minus_1": lambda: expmap.l_matrix("-", 1, "symmetric"),
    "r_half_half": lambda: expmap.r_matrix_rep(HALF, HALF, HALF, HALF),
}


def golden_bytes(name: str) -> bytes:
    payload = {"name": name, "matrix": matrix_json(GOLDEN_BUILDERS[name]())}
    return (json.dumps(payload, sort_keys=True, indent=2) + "\n").encode()


def record(directory) -> list[str]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name in sorted(GOLDEN_BUILDERS):
        (directory / f"{name}.json").write_bytes(golden_bytes(name))
        written.append(name)
    return written


def compare(directory) -> list[str]:
    """Byte-compare each golden file; returns the list of mismatching names.

    Raises FileNotFoundError if a golden file is absent.
    """
    directory = Path(directory)
    mismatches = []
    for name in sorted(GOLDEN_BUILDERS):
        path = directory / f"{name}.json"
        if not path.exists():
            raise FileNotFoundError(str(path))
        if path.read_bytes() != golden_bytes(name):
            mismatches.append(name)
    return mismatches
