"""Staircase diagrams of patterns as ASCII, SVG or PNG.

Row ``i`` is drawn at height ``i`` and entry ``c`` at horizontal position ``c``.
When highlighting is on, the rows that ``Copied`` would duplicate are marked.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import FrozenSet, Union

from .pattern import Blp, copy_range, copyable

HIGHLIGHT = "#66CCFF"
FORMATS = ("ascii", "svg", "png")


@dataclass(frozen=True)
class RenderOptions:
    format: str = "ascii"
    highlight_copy_rows: bool = False
    cell_width: int = 2

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.cell_width < 1:
            raise ValueError("cell_width must be >= 1")


def highlighted_rows(p: Blp, opts: RenderOptions) -> FrozenSet[int]:
    """1-based rows to mark; empty unless ``p`` is copyable."""
    if not opts.highlight_copy_rows or not copyable(p):
        return frozenset()
    a, b = copy_range(p)
    return frozenset(range(a, b + 1))


def render_ascii(p: Blp, opts: RenderOptions = RenderOptions()) -> str:
    marked = highlighted_rows(p, opts)
    cw = opts.cell_width
    lines = []
    for i, row in enumerate(p.rows, 1):
        glyph = "O" if i in marked else "o"
        cells = ["-"] * (cw * max(row.entries) + 1)
        for c in row.entries:
            cells[cw * c] = glyph
        lines.append("".join(cells) + f"  l={row.step}")
    return "\n".join(lines)


def render_svg(p: Blp, opts: RenderOptions = RenderOptions(format="svg")) -> str:
    marked = highlighted_rows(p, opts)
    top = max((max(r.entries) for r in p.rows), default=0)
    width, height = 40 + 20 * top, 20 + 20 * p.n
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}">'
    ]
    for i, row in enumerate(p.rows, 1):
        fill = HIGHLIGHT if i in marked else "white"
        y = 20 + 20 * (i - 1)
        for c in row.entries:
            out.append(f'<circle cx="{20 + 20 * c}" cy="{y}" r="5" fill="{fill}" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render_png(p: Blp, path: Union[str, Path], opts: RenderOptions = RenderOptions(format="png")) -> Path:
    """Write the diagram to ``path`` with matplotlib's Agg backend."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    marked = highlighted_rows(p, opts)
    top = max((max(r.entries) for r in p.rows), default=0)
    fig, ax = plt.subplots(figsize=(1 + 0.4 * (top + 1), 0.6 + 0.4 * p.n))
    for i, row in enumerate(p.rows, 1):
        xs = list(row.entries)
        ax.plot(xs, [i] * len(xs), color="0.6", lw=0.8, zorder=1)
        ax.scatter(
            xs,
            [i] * len(xs),
            s=60,
            c=HIGHLIGHT if i in marked else "white",
            edgecolors="black",
            zorder=2,
        )
        ax.text(top + 0.8, i, f"l={row.step}", va="center", fontsize=8)
    ax.set_xlim(-0.6, top + 2)
    ax.set_ylim(p.n + 0.6, 0.4)
    ax.set_yticks(range(1, p.n + 1))
    ax.set_xticks(range(0, top + 1))
    ax.set_xlabel("entry")
    ax.set_ylabel("row")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=100, metadata={"Software": None})
    plt.close(fig)
    return path


def render(p: Blp, opts: RenderOptions) -> str:
    """Text output for the ``ascii`` and ``svg`` formats."""
    if opts.format == "ascii":
        return render_ascii(p, opts)
    if opts.format == "svg":
        return render_svg(p, opts)
    raise ValueError("png output needs a file path; use render_png")
