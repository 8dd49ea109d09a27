"""Render the six figure kinds from simulator CSV tables.

Every renderer parses its input against the documented schema, draws with
matplotlib (Agg), and returns the arrays it actually plotted together with
content digests taken before and after drawing — equality of the digests
certifies that rendering did not alter the data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .schemas import (Table, read_info_lattice, read_peak_scale,  # noqa: E402
                      read_scale_profile, read_spacetime, read_spectrum)
from .specs import FigureSpec  # noqa: E402

# marker per classification tag in the spectrum scatter
TAG_STYLE = {
    "vacuum": dict(marker="o", color="tab:gray"),
    "vector-like": dict(marker="*", color="goldenrod", s=140),
    "scalar-like": dict(marker="s", color="tab:red"),
    "momentum-excitation": dict(marker="^", color="tab:blue"),
    "unclassified": dict(marker="x", color="black"),
}


@dataclass
class RenderResult:
    out: Path
    digest_before: str
    digest_after: str
    plotted: dict = field(default_factory=dict)

    @property
    def unmutated(self) -> bool:
        return self.digest_before == self.digest_after


def _finish(fig, ax, spec: FigureSpec) -> None:
    if spec.title:
        ax.set_title(spec.title)
    if spec.xlabel:
        ax.set_xlabel(spec.xlabel)
    if spec.ylabel:
        ax.set_ylabel(spec.ylabel)
    spec.out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(spec.out, dpi=150, bbox_inches="tight")
    plt.close(fig)


def _snapshot_time(table: Table, spec: FigureSpec) -> float:
    times = np.unique(table["t"])
    if "time" not in spec.options:
        return float(times[0])
    want = float(spec.options["time"])
    idx = int(np.argmin(np.abs(times - want)))
    return float(times[idx])


def render_spectrum(spec: FigureSpec) -> RenderResult:
    """Gap-vs-momentum scatter with one marker style per state tag."""
    table = read_spectrum(spec.input)
    before = table.digest()
    fig, ax = plt.subplots(figsize=(5, 4))
    tags = table["tag"]
    for tag in dict.fromkeys(tags):  # keep file order
        style = dict(TAG_STYLE.get(str(tag), TAG_STYLE["unclassified"]))
        mask = tags == tag
        ax.scatter(table["p2"][mask], table["gap"][mask], label=str(tag),
                   **style)
    ax.legend(fontsize=8)
    ax.set_xlabel(spec.xlabel or r"$\langle P^2 \rangle$")
    ax.set_ylabel(spec.ylabel or r"$E - E_0$")
    _finish(fig, ax, spec)
    return RenderResult(spec.out, before, table.digest(),
                        plotted={"p2": table["p2"], "gap": table["gap"],
                                 "tag": tags})


def render_scale_profile(spec: FigureSpec) -> RenderResult:
    """I(l) line plot, one line per sample time."""
    table = read_scale_profile(spec.input)
    before = table.digest()
    fig, ax = plt.subplots(figsize=(5, 4))
    times = np.unique(table["t"])
    cmap = plt.get_cmap("viridis")
    for i, t in enumerate(times):
        mask = table["t"] == t
        order = np.argsort(table["l"][mask])
        ax.plot(table["l"][mask][order], table["value"][mask][order],
                marker="o", ms=3, color=cmap(i / max(1, len(times) - 1)),
                label=f"t = {t:g}")
    if len(times) <= 8:
        ax.legend(fontsize=8)
    ax.set_xlabel(spec.xlabel or r"$\ell$")
    ax.set_ylabel(spec.ylabel or "information per scale (bits)")
    _finish(fig, ax, spec)
    return RenderResult(spec.out, before, table.digest(),
                        plotted={"l": table["l"], "value": table["value"]})


def render_info_lattice(spec: FigureSpec) -> RenderResult:
    """Triangular heatmap of i(n, l) at one snapshot time: x = n, y = l."""
    table = read_info_lattice(spec.input)
    before = table.digest()
    t = _snapshot_time(table, spec)
    mask = table["t"] == t
    n, l, i = table["n"][mask], table["l"][mask], table["i"][mask]
    fig, ax = plt.subplots(figsize=(6, 3.2))
    vmax = float(max(i.max(), 1e-12))
    sc = ax.scatter(n, l, c=i, s=30 + 170 * np.clip(i, 0, None) / vmax,
                    cmap="inferno", vmin=0.0, vmax=vmax, edgecolors="none")
    fig.colorbar(sc, ax=ax, label=r"$i(n,\ell)$ (bits)")
    ax.set_xlabel(spec.xlabel or "n")
    ax.set_ylabel(spec.ylabel or r"$\ell$")
    ax.set_title(spec.title or f"t = {t:g}")
    _finish(fig, ax, spec)
    return RenderResult(spec.out, before, table.digest(),
                        plotted={"n": n, "l": l, "i": i})


def render_spacetime(spec: FigureSpec) -> RenderResult:
    """Heatmap of a site- or link-resolved observable over time."""
    value = str(spec.options.get("value", "S"))
    table = read_spacetime(spec.input, value)
    before = table.digest()
    times = np.unique(table["t"])
    positions = np.unique(table["n"])
    grid = np.full((len(times), len(positions)), np.nan)
    t_idx = np.searchsorted(times, table["t"])
    n_idx = np.searchsorted(positions, table["n"])
    grid[t_idx, n_idx] = table[value]
    fig, ax = plt.subplots(figsize=(5, 4))
    mesh = ax.pcolormesh(positions, times, grid, shading="nearest",
                         cmap="magma" if value == "S" else "RdBu_r")
    fig.colorbar(mesh, ax=ax, label=value)
    ax.set_xlabel(spec.xlabel or "n")
    ax.set_ylabel(spec.ylabel or "t")
    _finish(fig, ax, spec)
    return RenderResult(spec.out, before, table.digest(),
                        plotted={"t": times, "n": positions, value: grid})


def render_waterfall(spec: FigureSpec) -> RenderResult:
    """Ibar(l) traces stacked with a vertical offset, early times at the top."""
    table = read_scale_profile(spec.input)
    before = table.digest()
    times = np.unique(table["t"])
    stride = int(spec.options.get("stride", 1))
    shown = times[::stride]
    offset = float(spec.options.get("offset", 0.5))
    fig, ax = plt.subplots(figsize=(5, 6))
    cmap = plt.get_cmap("plasma")
    for rank, t in enumerate(shown):
        mask = table["t"] == t
        order = np.argsort(table["l"][mask])
        base = (len(shown) - 1 - rank) * offset
        ax.plot(table["l"][mask][order],
                table["value"][mask][order] + base,
                color=cmap(rank / max(1, len(shown) - 1)), lw=1.2)
    ax.set_xlabel(spec.xlabel or r"$\ell$")
    ax.set_ylabel(spec.ylabel or r"$\bar I(\ell)$ + offset")
    _finish(fig, ax, spec)
    return RenderResult(spec.out, before, table.digest(),
                        plotted={"l": table["l"], "value": table["value"]})


def render_peak_scale(spec: FigureSpec) -> RenderResult:
    """Step plot of the peak scale over time plus a ballistic guide line.

    The guide has slope 1/2 (half the lattice light speed) and is anchored
    at the first sample with a defined peak.
    """
    table = read_peak_scale(spec.input)
    before = table.digest()
    t, l_peak = table["t"], table["l_peak"]
    fig, ax = plt.subplots(figsize=(5, 4))
    defined = l_peak >= 0
    ax.step(t[defined], l_peak[defined], where="post", label=r"$\ell_{max}$")
    slope = float(spec.options.get("guide_slope", 0.5))
    if np.any(defined):
        t0 = float(t[defined][0])
        l0 = float(l_peak[defined][0])
        ax.plot(t, l0 + slope * (t - t0), "--", color="gray",
                label=f"slope {slope:g}")
    ax.legend(fontsize=8)
    ax.set_xlabel(spec.xlabel or "t")
    ax.set_ylabel(spec.ylabel or r"$\ell_{max}$")
    _finish(fig, ax, spec)
    return RenderResult(spec.out, before, table.digest(),
                        plotted={"t": t, "l_peak": l_peak})


RENDERERS = {
    "spectrum": render_spectrum,
    "scale-profile": render_scale_profile,
    "info-lattice": render_info_lattice,
    "spacetime": render_spacetime,
    "waterfall": render_waterfall,
    "peak-scale": render_peak_scale,
}


def render(spec: FigureSpec) -> RenderResult:
    result = RENDERERS[spec.kind](spec)
    if not result.unmutated:
        raise RuntimeError(
            f"renderer for {spec.kind!r} mutated its input arrays")
    return result
