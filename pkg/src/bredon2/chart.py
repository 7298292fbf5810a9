"""Chart construction and text/JSON/CSV rendering.

A chart is a rectangular grid of cells, one per degree, each carrying the
dimension and the canonical basis strings.  Ring charts put the trivial
degree ``a`` on the horizontal axis and the sign part ``p`` on the vertical
axis; integer-bidegree rings use ``a`` horizontal and weight ``b`` vertical.
The weight-plane chart replaces dimensions by the region letters ``M``
(point cone), ``E`` (free-locus cone), the block index for tilde blocks and
``.`` for the vanishing region.

Cell ordering is weight-lexicographic, then degree-lexicographic, and the
CSV columns are fixed: ``ring,a,p,b,q,dim,basis``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Optional

from .expr import RingId, ring_spec
from .grading import MotDegree, RO2Degree, classify_weight
from .verify import Window

__all__ = [
    "ChartCell",
    "build_cells",
    "ascii_chart",
    "plane_cells",
    "ascii_plane",
    "cells_to_json",
    "cells_to_csv",
    "plane_to_json",
    "plane_to_csv",
    "dim_grid",
]

CSV_HEADER = ["ring", "a", "p", "b", "q", "dim", "basis"]


@dataclass(frozen=True, slots=True)
class ChartCell:
    ring: str
    a: int
    p: Optional[int]
    b: Optional[int]
    q: Optional[int]
    dim: int
    basis: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "p": self.p,
            "b": self.b,
            "q": self.q,
            "dim": self.dim,
            "basis": list(self.basis),
        }


def build_cells(
    ring: RingId | str,
    window: Window,
    weight: Optional[tuple[int, int]] = None,
) -> list[ChartCell]:
    """Enumerate chart cells for a ring over the window.

    Four-graded rings need a fixed ``weight = (b, q)``; the other rings
    ignore it.
    """
    spec = ring_spec(ring)
    name = str(spec.ring)
    cells = []
    if spec.graded_by == "ro2":
        for d in window.degrees():
            basis = spec.basis(d)
            cells.append(ChartCell(
                name, d.a, d.p, None, None, len(basis),
                tuple(spec.mono_str(m) for m in basis),
            ))
    elif spec.graded_by == "mot":
        if weight is None:
            raise ValueError(f"ring {name} needs a fixed weight (b, q)")
        b, q = weight
        for d in window.degrees():
            basis = spec.basis(MotDegree(d, RO2Degree(b, q)))
            cells.append(ChartCell(
                name, d.a, d.p, b, q, len(basis),
                tuple(spec.mono_str(m) for m in basis),
            ))
    elif spec.graded_by == "bideg":
        for b in range(window.b_min, window.b_max + 1):
            for a in range(window.a_min, window.a_max + 1):
                basis = spec.basis((a, b))
                cells.append(ChartCell(
                    name, a, None, b, None, len(basis),
                    tuple(spec.mono_str(m) for m in basis),
                ))
    else:
        for a in range(window.a_min, window.a_max + 1):
            basis = spec.basis(a)
            cells.append(ChartCell(
                name, a, None, None, None, len(basis),
                tuple(spec.mono_str(m) for m in basis),
            ))
    cells.sort(key=lambda c: (c.b or 0, c.q or 0, c.a, c.p or 0))
    return cells


def dim_grid(cells: list[ChartCell]) -> tuple[dict, str, str]:
    """Arrange cells into a {(x, y): dim} map plus axis names."""
    if any(c.p is not None for c in cells):
        return {(c.a, c.p): c.dim for c in cells}, "a", "p"
    if any(c.b is not None for c in cells):
        return {(c.a, c.b): c.dim for c in cells}, "a", "b"
    return {(c.a, 0): c.dim for c in cells}, "a", ""


def _render_grid(grid: dict, x_name: str, y_name: str) -> str:
    xs = sorted({x for x, _ in grid})
    ys = sorted({y for _, y in grid}, reverse=True)
    width = max(len(str(x)) for x in xs)
    lines = []
    label = f"{y_name}\\{x_name}" if y_name else x_name
    row_label_w = max(len(label), max(len(str(y)) for y in ys))
    header = " ".join(str(x).rjust(width) for x in xs)
    lines.append(f"{label.rjust(row_label_w)}  {header}")
    for y in ys:
        row = []
        for x in xs:
            dim = grid.get((x, y), 0)
            row.append(("." if dim == 0 else str(dim)).rjust(width))
        lines.append(f"{str(y).rjust(row_label_w)}  {' '.join(row)}")
    return "\n".join(lines)


def ascii_chart(
    ring: RingId | str,
    window: Window,
    weight: Optional[tuple[int, int]] = None,
) -> str:
    """Dimension grid with axes; ``.`` marks zero."""
    cells = build_cells(ring, window, weight)
    grid, x_name, y_name = dim_grid(cells)
    title = str(ring_spec(ring).ring)
    if weight is not None:
        title += f" at weight ({weight[0]},{weight[1]})"
    return f"{title}\n{_render_grid(grid, x_name, y_name)}"


def plane_cells(window: Window) -> list[dict]:
    out = []
    for b in range(window.b_min, window.b_max + 1):
        for q in range(window.q_min, window.q_max + 1):
            region = classify_weight(b, q)
            label = region.kind.value
            if region.index is not None:
                label = f"{label}({region.index})"
            out.append({"b": b, "q": q, "region": label,
                        "letter": region.letter()})
    return out


def ascii_plane(window: Window) -> str:
    """Weight-plane regions: M, E, block index digits, ``.`` for zero."""
    grid = {
        (c["b"], c["q"]): c["letter"] for c in plane_cells(window)
    }
    xs = sorted({x for x, _ in grid})
    ys = sorted({y for _, y in grid}, reverse=True)
    width = max(len(str(x)) for x in xs)
    label = "q\\b"
    row_label_w = max(len(label), max(len(str(y)) for y in ys))
    lines = [f"{label.rjust(row_label_w)}  "
             + " ".join(str(x).rjust(width) for x in xs)]
    for y in ys:
        row = " ".join(grid[(x, y)].rjust(width) for x in xs)
        lines.append(f"{str(y).rjust(row_label_w)}  {row}")
    legend = "legend: M point cone, E free-locus cone, digits tilde block index, . zero"
    return "\n".join(lines) + "\n" + legend


def cells_to_json(
    ring: RingId | str,
    window: Window,
    cells: list[ChartCell],
    weight: Optional[tuple[int, int]] = None,
) -> str:
    doc = {
        "mode": "ring",
        "ring": str(ring_spec(ring).ring),
        "window": window.to_dict(),
        "weight": None if weight is None else {"b": weight[0], "q": weight[1]},
        "cells": [c.to_dict() for c in cells],
    }
    return json.dumps(doc, indent=2)


def cells_to_csv(cells: list[ChartCell]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(CSV_HEADER)
    for c in cells:
        writer.writerow([
            c.ring,
            c.a,
            "" if c.p is None else c.p,
            "" if c.b is None else c.b,
            "" if c.q is None else c.q,
            c.dim,
            " ".join(c.basis),
        ])
    return buf.getvalue()


def plane_to_json(window: Window) -> str:
    doc = {
        "mode": "plane",
        "window": window.to_dict(),
        "cells": [
            {"b": c["b"], "q": c["q"], "region": c["region"]}
            for c in plane_cells(window)
        ],
    }
    return json.dumps(doc, indent=2)


def plane_to_csv(window: Window) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["b", "q", "region"])
    for c in plane_cells(window):
        writer.writerow([c["b"], c["q"], c["region"]])
    return buf.getvalue()
