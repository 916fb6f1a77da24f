"""File formats: complex matrix container, ridge and component CSVs."""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path
from typing import List, Sequence, Tuple

import numpy as np

from .exceptions import SignalFormatError
from .reconstruct import Component
from .ridge import Ridge

__all__ = [
    "write_matrix",
    "read_matrix",
    "write_matrix_csv",
    "write_ridges",
    "read_ridges",
    "write_component",
    "write_json",
    "sidecar_path",
]


def sidecar_path(path) -> Path:
    return Path(path).with_suffix(".json")


def write_json(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, allow_nan=False)
        fh.write("\n")


def write_matrix(m: np.ndarray, path, meta: dict, meta_path=None) -> Path:
    """Row-major little-endian complex64 matrix plus a JSON sidecar.

    The sidecar gets ``rows`` and ``cols`` added to ``meta``.
    """
    m = np.asarray(m)
    if m.ndim != 2:
        raise ValueError("matrix must be 2-D")
    data = np.ascontiguousarray(m, dtype="<c8")
    Path(path).write_bytes(data.tobytes(order="C"))
    meta = dict(meta, rows=int(m.shape[0]), cols=int(m.shape[1]), dtype="complex64-le")
    meta_path = Path(meta_path) if meta_path else sidecar_path(path)
    write_json(meta, meta_path)
    return meta_path


def read_matrix(path, meta_path=None) -> Tuple[np.ndarray, dict]:
    meta_path = Path(meta_path) if meta_path else sidecar_path(path)
    with open(meta_path, encoding="utf-8") as fh:
        meta = json.load(fh)
    raw = Path(path).read_bytes()
    rows, cols = int(meta["rows"]), int(meta["cols"])
    if len(raw) != rows * cols * 8:
        raise SignalFormatError(
            f"{path}: {len(raw)} bytes, expected {rows}x{cols} complex64 values ({rows * cols * 8} bytes)"
        )
    m = np.frombuffer(raw, dtype="<c8").reshape(rows, cols).astype(complex)
    return m, meta


def write_matrix_csv(m: np.ndarray, row_values: Sequence[float], times: Sequence[float], path) -> None:
    """Inspection format: times as header, row coordinate then |m| per row."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["row"] + [repr(float(t)) for t in times])
        for v, row in zip(row_values, np.abs(m)):
            w.writerow([repr(float(v))] + [repr(float(x)) for x in row])


def write_ridges(ridges: Sequence[Ridge], times, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t", "ridge_id", "omega", "energy"])
        for rid, r in enumerate(ridges):
            for t, f, e in zip(times, r.freq, r.energy):
                w.writerow([repr(float(t)), rid, repr(float(f)), repr(float(e))])


def read_ridges(path) -> List[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
    """Ridges as ``(t, omega, energy)`` arrays, ordered by ridge id."""
    groups = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["t", "ridge_id", "omega", "energy"]:
            raise SignalFormatError(f"{path}: expected header t,ridge_id,omega,energy", row=1)
        for i, row in enumerate(reader, start=2):
            if not row:
                continue
            try:
                t, rid, f, e = float(row[0]), int(row[1]), float(row[2]), float(row[3])
            except (ValueError, IndexError):
                raise SignalFormatError(f"{path}: malformed ridge row {row!r}", row=i) from None
            if not all(map(math.isfinite, (t, f, e))):
                raise SignalFormatError(f"{path}: non-finite value", row=i)
            groups.setdefault(rid, []).append((t, f, e))
    return [tuple(np.array(c) for c in zip(*groups[k])) for k in sorted(groups)]


def write_component(c: Component, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["t", "real", "imag", "amp", "inst_freq"])
        for t, z, a, f in zip(c.real_part.times, c.complex_trace, c.amp, c.inst_freq):
            w.writerow([repr(float(t)), repr(float(z.real)), repr(float(z.imag)), repr(float(a)), repr(float(f))])
