"""Readers for the simulator's CSV interchange tables.

Each reader parses one documented schema into numpy arrays and fails loudly
on header or type mismatches. A content digest over the parsed arrays lets
callers verify that rendering never alters the data.
"""

from __future__ import annotations

import csv
import hashlib
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class SchemaError(ValueError):
    """CSV file does not match the documented schema."""


@dataclass(frozen=True)
class Table:
    """Columns of one CSV file, keyed by header name."""

    path: Path
    columns: dict[str, np.ndarray]

    def __getitem__(self, name: str) -> np.ndarray:
        return self.columns[name]

    def digest(self) -> str:
        """Content hash of the parsed arrays (order- and name-sensitive)."""
        h = hashlib.sha256()
        for name in sorted(self.columns):
            h.update(name.encode())
            arr = self.columns[name]
            h.update(str(arr.dtype).encode())
            if arr.dtype == object:  # string column: hash values, not ids
                for item in arr:
                    h.update(str(item).encode())
                    h.update(b"\x00")
            else:
                h.update(np.ascontiguousarray(arr).tobytes())
        return h.hexdigest()


def _read(path: str | Path, header: list[str],
          dtypes: list[type]) -> Table:
    path = Path(path)
    if not path.is_file():
        raise SchemaError(f"input file not found: {path}")
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            got = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        if got != header:
            raise SchemaError(
                f"{path}: header {got} does not match expected {header}")
        raw = [[] for _ in header]
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise SchemaError(f"{path}:{lineno}: expected "
                                  f"{len(header)} fields, got {len(row)}")
            for cell, bucket, typ in zip(row, raw, dtypes):
                try:
                    bucket.append(typ(cell))
                except ValueError as err:
                    raise SchemaError(f"{path}:{lineno}: {err}") from err
    columns = {}
    for name, bucket, typ in zip(header, raw, dtypes):
        columns[name] = np.array(
            bucket, dtype=float if typ is float else
            (np.int64 if typ is int else object))
    return Table(path=path, columns=columns)


def read_spectrum(path) -> Table:
    """index,energy,gap,p2,overlap_V,overlap_S,tag"""
    return _read(path, ["index", "energy", "gap", "p2", "overlap_V",
                        "overlap_S", "tag"],
                 [int, float, float, float, float, float, str])


def read_info_lattice(path) -> Table:
    """t,n,l,i — snapshot rows of the triangular lattice."""
    return _read(path, ["t", "n", "l", "i"], [float, float, int, float])


def read_scale_profile(path) -> Table:
    """t,l,value — information per scale, one block per sample time."""
    return _read(path, ["t", "l", "value"], [float, int, float])


def read_spacetime(path, value_name: str) -> Table:
    """t,n,<value_name> — space-time map such as S(n,t) or L(n,t)."""
    return _read(path, ["t", "n", value_name], [float, int, float])


def read_peak_scale(path) -> Table:
    """t,l_peak — peak information scale over time (-1 = no peak)."""
    return _read(path, ["t", "l_peak"], [float, int])
