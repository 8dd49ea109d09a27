"""Figure specifications: what to draw, from which file, to which image.

A spec file is JSON holding either one figure object or a list of them:

    {"kind": "spacetime", "input": "entropy.csv", "value": "S",
     "out": "entropy.png", "title": "Entanglement entropy"}

Validation resolves relative paths against the spec file's directory and
parses every input against its schema before any rendering starts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .schemas import SchemaError

KINDS = ("spectrum", "scale-profile", "info-lattice", "spacetime",
         "waterfall", "peak-scale")


class SpecError(ValueError):
    """Malformed or incomplete figure specification."""


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    input: Path
    out: Path
    title: str = ""
    xlabel: str = ""
    ylabel: str = ""
    options: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SpecError(f"unknown figure kind {self.kind!r}; "
                            f"expected one of {KINDS}")


def _one(obj: dict, base: Path) -> FigureSpec:
    if not isinstance(obj, dict):
        raise SpecError("each figure entry must be a JSON object")
    for key in ("kind", "input", "out"):
        if key not in obj:
            raise SpecError(f"figure entry missing required key {key!r}")
    known = {"kind", "input", "out", "title", "xlabel", "ylabel"}
    options = {k: v for k, v in obj.items() if k not in known}
    return FigureSpec(
        kind=obj["kind"],
        input=(base / obj["input"]).resolve(),
        out=(base / obj["out"]).resolve(),
        title=obj.get("title", ""),
        xlabel=obj.get("xlabel", ""),
        ylabel=obj.get("ylabel", ""),
        options=options,
    )


def load_specs(path: str | Path) -> list[FigureSpec]:
    path = Path(path)
    if not path.is_file():
        raise SpecError(f"spec file not found: {path}")
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise SpecError(f"{path}: invalid JSON: {err}") from err
    entries = payload if isinstance(payload, list) else [payload]
    if not entries:
        raise SpecError(f"{path}: no figure entries")
    specs = [_one(entry, path.parent) for entry in entries]
    for spec in specs:
        if not spec.input.is_file():
            raise SchemaError(f"input file not found: {spec.input}")
    return specs
