"""Render charts to image files, with the cell data saved alongside as CSV.

This is the graphical twin of :mod:`bredon2.chart`: the same grids, drawn
with matplotlib instead of ASCII.  ``render_album`` writes the standard set
of figures for one window into a directory.
"""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib import colors, patches

from .chart import build_cells, cells_to_csv, dim_grid, plane_cells, plane_to_csv
from .expr import RingId, ring_spec
from .verify import Window

__all__ = ["render_ring_chart", "render_plane", "render_album"]

_REGION_COLORS = {
    "M": "#4878cf",
    "E": "#6acc65",
    ".": "#ffffff",
}
_BLOCK_COLOR = "#d65f5f"


def _grid_extent(xs, ys):
    return [min(xs) - 0.5, max(xs) + 0.5, min(ys) - 0.5, max(ys) + 0.5]


def render_ring_chart(
    ring: RingId | str,
    window: Window,
    path: str | Path,
    weight: Optional[tuple[int, int]] = None,
) -> Path:
    """Draw one dimension grid as filled squares; returns the output path.

    A CSV with the underlying cells is written next to the image.
    """
    cells = build_cells(ring, window, weight)
    grid, x_name, y_name = dim_grid(cells)
    xs = sorted({x for x, _ in grid})
    ys = sorted({y for _, y in grid})
    data = [[grid.get((x, y), 0) for x in xs] for y in ys]

    fig, ax = plt.subplots(figsize=(6, 5))
    vmax = max(1, max(max(row) for row in data))
    ax.imshow(
        data,
        origin="lower",
        extent=_grid_extent(xs, ys),
        cmap=colors.ListedColormap(["#ffffff", "#4878cf"]) if vmax == 1
        else "Blues",
        vmin=0,
        vmax=vmax,
        interpolation="nearest",
    )
    ax.set_xticks(xs)
    ax.set_yticks(ys)
    ax.set_xlabel(x_name)
    ax.set_ylabel(y_name or "")
    ax.grid(True, color="#dddddd", linewidth=0.5)
    title = str(ring_spec(ring).ring)
    if weight is not None:
        title += f" at weight ({weight[0]},{weight[1]})"
    ax.set_title(title)
    ax.axhline(0, color="#888888", linewidth=0.8)
    ax.axvline(0, color="#888888", linewidth=0.8)

    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    path.with_suffix(".csv").write_text(cells_to_csv(cells))
    return path


def render_plane(window: Window, path: str | Path) -> Path:
    """Draw the weight-plane region chart; CSV data goes next to it."""
    cells = plane_cells(window)
    bs = sorted({c["b"] for c in cells})
    qs = sorted({c["q"] for c in cells})

    fig, ax = plt.subplots(figsize=(6, 5))
    for c in cells:
        letter = c["letter"]
        color = _REGION_COLORS.get(letter, _BLOCK_COLOR)
        ax.add_patch(
            patches.Rectangle(
                (c["b"] - 0.5, c["q"] - 0.5), 1, 1,
                facecolor=color, edgecolor="#dddddd", linewidth=0.4,
            )
        )
        if letter not in ("M", "E", "."):
            ax.text(c["b"], c["q"], letter, ha="center", va="center",
                    fontsize=7)
    ax.set_xlim(bs[0] - 0.5, bs[-1] + 0.5)
    ax.set_ylim(qs[0] - 0.5, qs[-1] + 0.5)
    ax.set_xlabel("b")
    ax.set_ylabel("q")
    ax.set_title("weight-plane regions")
    ax.axhline(0, color="#888888", linewidth=0.8)
    ax.axvline(0, color="#888888", linewidth=0.8)
    handles = [
        patches.Patch(facecolor=_REGION_COLORS["M"], label="point cone"),
        patches.Patch(facecolor=_REGION_COLORS["E"], label="free-locus cone"),
        patches.Patch(facecolor=_BLOCK_COLOR, label="tilde block (index shown)"),
        patches.Patch(facecolor="#ffffff", edgecolor="#999999", label="zero"),
    ]
    ax.legend(handles=handles, loc="upper left", fontsize=7)

    path = Path(path)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    path.with_suffix(".csv").write_text(plane_to_csv(window))
    return path


def render_album(out_dir: str | Path, window: Window) -> list[Path]:
    """Write the standard figure set (plus CSVs) into ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for ring in ("pt", "ec2top", "tildetop", "b(1)", "b(2)", "bc2"):
        stem = str(ring).replace("(", "").replace(")", "")
        written.append(
            render_ring_chart(ring, window, out / f"{stem}.png")
        )
    for weight in ((0, 0), (1, -2), (-1, 1)):
        b, q = weight
        written.append(
            render_ring_chart(
                "motivic", window, out / f"motivic_wt_{b}_{q}.png",
                weight=weight,
            )
        )
    written.append(render_plane(window, out / "weight_plane.png"))
    return written
