"""Binary field files with a JSON provenance sidecar.

Layout (all little-endian):

    offset  0  magic "BNLS"      4 bytes
    offset  4  format version    u32 (= 1)
    offset  8  dim               u32
    offset 12  points_per_axis   u32
    offset 16  box_length        f64
    offset 24  samples           points_per_axis**dim f64, row-major

The sidecar is ``<path>.json`` and holds provenance only (params, solver,
iterations, residuals); the binary file alone reconstructs the field.
"""

from __future__ import annotations

import hashlib
import json
import struct
from pathlib import Path

import numpy as np

from .errors import FieldFormatError
from .grid import BoxGrid, Field

MAGIC = b"BNLS"
FORMAT_VERSION = 1
_HEADER = struct.Struct("<4sIIId")

_OFF_MAGIC = 0
_OFF_VERSION = 4
_OFF_DIM = 8
_OFF_POINTS = 12
_OFF_BOX = 16
_OFF_SAMPLES = 24


def sidecar_path(path) -> Path:
    return Path(str(path) + ".json")


def field_to_bytes(field: Field) -> bytes:
    g = field.grid
    header = _HEADER.pack(MAGIC, FORMAT_VERSION, g.dim, g.points_per_axis, g.box_length)
    return header + field.samples.astype("<f8").tobytes(order="C")


def write_field(path, field: Field, sidecar: dict | None = None) -> Path:
    """Write the binary field file; optionally a JSON sidecar next to it."""
    path = Path(path)
    path.write_bytes(field_to_bytes(field))
    if sidecar is not None:
        sidecar_path(path).write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    return path


def field_from_bytes(raw: bytes) -> Field:
    if len(raw) < _HEADER.size:
        raise FieldFormatError(
            f"file truncated inside the {_HEADER.size}-byte header", offset=len(raw)
        )
    magic, version, dim, points, box_length = _HEADER.unpack_from(raw, 0)
    if magic != MAGIC:
        raise FieldFormatError(f"bad magic {magic!r}, expected {MAGIC!r}", offset=_OFF_MAGIC)
    if version != FORMAT_VERSION:
        raise FieldFormatError(
            f"unsupported format version {version}, expected {FORMAT_VERSION}",
            offset=_OFF_VERSION,
        )
    if dim not in (1, 2, 3):
        raise FieldFormatError(f"dim {dim} out of range", offset=_OFF_DIM)
    if points < 32 or (points & (points - 1)) != 0:
        raise FieldFormatError(
            f"points_per_axis {points} is not a power of two >= 32", offset=_OFF_POINTS
        )
    if not (box_length > 0 and np.isfinite(box_length)):
        raise FieldFormatError(f"box_length {box_length} is not positive", offset=_OFF_BOX)
    expected = points**dim * 8
    payload = len(raw) - _OFF_SAMPLES
    if payload != expected:
        raise FieldFormatError(
            f"expected {expected} sample bytes, found {payload}",
            offset=_OFF_SAMPLES + min(payload, expected),
        )
    samples = np.frombuffer(raw, dtype="<f8", count=points**dim, offset=_OFF_SAMPLES)
    grid = BoxGrid(dim=dim, points_per_axis=points, box_length=box_length)
    return Field(grid, samples)


def read_field(path) -> Field:
    return field_from_bytes(Path(path).read_bytes())


def read_sidecar(path) -> dict:
    return json.loads(sidecar_path(path).read_text())


def file_sha256(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
