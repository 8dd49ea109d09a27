"""Deterministic run outputs: CSV tables and a JSON manifest with checksums.

CSV conventions: UTF-8, mandatory header row, '.' decimal separator,
half-integer positions written as decimals (e.g. 3.5). These schemas are
the interchange surface for the plotting frontend and offline analysis.
"""

from __future__ import annotations

import csv
import hashlib
import json
import time
from pathlib import Path

from . import __version__
from .info_lattice import InfoLattice


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def write_csv(path: Path, header: list[str], rows) -> Path:
    path = Path(path)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(x) for x in row])
    return path


def write_info_lattice_csv(path: Path, snapshots: list[tuple[float, InfoLattice]]) -> Path:
    rows = []
    for t, lattice in snapshots:
        for (n, l) in sorted(lattice.values, key=lambda key: (key[1], key[0])):
            rows.append((t, float(n), l, lattice.values[(n, l)]))
    return write_csv(path, ["t", "n", "l", "i"], rows)


def write_scale_profile_csv(path: Path,
                            profiles: list[tuple[float, dict[int, float]]]) -> Path:
    rows = []
    for t, profile in profiles:
        for l in sorted(profile):
            rows.append((t, l, profile[l]))
    return write_csv(path, ["t", "l", "value"], rows)


def write_spacetime_csv(path: Path, value_name: str,
                        samples: list[tuple[float, list[float]]],
                        first_n: int = 1) -> Path:
    rows = []
    for t, values in samples:
        for offset, v in enumerate(values):
            rows.append((t, first_n + offset, float(v)))
    return write_csv(path, ["t", "n", value_name], rows)


def sha256_of(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(65536), b""):
            digest.update(chunk)
    return digest.hexdigest()


def write_manifest(out_dir: Path, config_echo: dict, files: list[Path],
                   started: float, complete: bool = True) -> Path:
    """Inventory of a run: config echo, version, timing, file checksums."""
    out_dir = Path(out_dir)
    manifest = {
        "tool_version": __version__,
        "config": config_echo,
        "started_unix": started,
        "finished_unix": time.time(),
        "complete": complete,
        "files": {p.name: sha256_of(p) for p in files},
    }
    path = out_dir / "manifest.json"
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
    return path
