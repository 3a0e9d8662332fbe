"""Planar drawings of diagrams: matplotlib figures and standalone TikZ.

Domain endpoints sit on the left edge and codomain endpoints on the right,
both indexed bottom to top.  Through strands and turn-backs are cubic Bezier
curves with horizontal tangents at their ends; loops are circles in a row
beneath the strands.  Each color gets its own dash pattern (and line color),
listed in a legend.

The line colors come from ``CBR_COLOR_PALETTE`` (comma-separated matplotlib
colors) when set.  Layout never depends on it.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from pathlib import Path

import matplotlib
from matplotlib.figure import Figure
from matplotlib.lines import Line2D
from matplotlib.patches import Circle, PathPatch
from matplotlib.path import Path as MplPath

from .diagram import Diagram
from .errors import UnsupportedFormatError

WIDTH = 3.0
LOOP_RADIUS = 0.3

DASHES = ["-", "--", ":", "-.", (0, (5, 1, 1, 1, 1, 1)), (0, (1, 3))]
TIKZ_DASHES = ["solid", "dashed", "dotted", "dash dot", "dash dot dot", "loosely dotted"]
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]

STYLE = {
    "font.size": 10,
    "lines.linewidth": 1.8,
    "legend.frameon": False,
    "legend.fontsize": 9,
    "svg.hashsalt": "chromatic-brauer",
    "svg.fonttype": "path",
}

FORMATS = ("svg", "tikz")


def palette() -> list[str]:
    env = os.environ.get("CBR_COLOR_PALETTE", "").strip()
    if env:
        return [c.strip() for c in env.split(",") if c.strip()]
    return PALETTE


def dash_for(k: int):
    return DASHES[k % len(DASHES)]


@dataclass(frozen=True)
class Curve:
    color: int
    points: tuple  # four control points


@dataclass(frozen=True)
class Loop:
    color: int
    center: tuple
    radius: float


def layout(f: Diagram) -> tuple[list, tuple]:
    """Primitives for ``f`` and the bounding box ``(xmin, xmax, ymin, ymax)``."""
    prims: list = []
    for a, b in f.through():
        ya, yb = float(a), float(b)
        mid = WIDTH / 2
        prims.append(Curve(f.dom[a], ((0.0, ya), (mid, ya), (mid, yb), (WIDTH, yb))))
    for a, b in f.cups():
        h = min(0.35 + 0.3 * (b - a), 0.45 * WIDTH)
        prims.append(Curve(f.dom[a], ((0.0, float(a)), (h, float(a)), (h, float(b)), (0.0, float(b)))))
    for a, b in f.caps():
        h = WIDTH - min(0.35 + 0.3 * (b - a), 0.45 * WIDTH)
        prims.append(Curve(f.cod[a], ((WIDTH, float(a)), (h, float(a)), (h, float(b)), (WIDTH, float(b)))))
    loops = [k for k, n in f.loops for _ in range(n)]
    y_loop = -1.0
    for i, k in enumerate(loops):
        x = LOOP_RADIUS + 0.1 + i * (2 * LOOP_RADIUS + 0.2)
        prims.append(Loop(k, (round(x, 4), y_loop), LOOP_RADIUS))
    height = max(len(f.dom), len(f.cod), 1) - 1
    xmax = WIDTH
    if loops:
        xmax = max(WIDTH, prims[-1].center[0] + LOOP_RADIUS)
    ymin = y_loop - LOOP_RADIUS if loops else 0.0
    return prims, (0.0, xmax, ymin, float(height))


def colors_used(f: Diagram) -> list[int]:
    return sorted(set(f.dom) | set(f.cod) | {k for k, _ in f.loops})


def draw(f: Diagram) -> Figure:
    """A matplotlib figure of ``f``; no pyplot state is touched."""
    pal = palette()
    prims, (x0, x1, y0, y1) = layout(f)
    with matplotlib.rc_context(STYLE):
        fig = Figure(figsize=(1.2 + 0.8 * (x1 - x0), 1.0 + 0.6 * (y1 - y0 + 1)))
        ax = fig.add_subplot(1, 1, 1)
        for p in prims:
            style = dict(linestyle=dash_for(p.color), edgecolor=pal[p.color % len(pal)],
                         facecolor="none", linewidth=STYLE["lines.linewidth"])
            if isinstance(p, Curve):
                path = MplPath(p.points, [MplPath.MOVETO] + [MplPath.CURVE4] * 3)
                ax.add_patch(PathPatch(path, **style))
            else:
                ax.add_patch(Circle(p.center, p.radius, **style))
        ends = [(0.0, i) for i in range(len(f.dom))] + [(WIDTH, j) for j in range(len(f.cod))]
        if ends:
            ax.plot(*zip(*ends), linestyle="none", marker="o", markersize=3, color="black")
        handles = [Line2D([], [], linestyle=dash_for(k), color=pal[k % len(pal)], label=str(k))
                   for k in colors_used(f)]
        if handles:
            ax.legend(handles=handles, title="color", loc="upper left",
                      bbox_to_anchor=(1.0, 1.0))
        ax.set_xlim(x0 - 0.2, x1 + 0.2)
        ax.set_ylim(y0 - 0.4, y1 + 0.4)
        ax.set_aspect("equal")
        ax.axis("off")
        fig.tight_layout()
    return fig


def to_svg(f: Diagram) -> str:
    fig = draw(f)
    buf = io.StringIO()
    with matplotlib.rc_context(STYLE):
        fig.savefig(buf, format="svg", metadata={"Date": None})
    return buf.getvalue()


def _num(x: float) -> str:
    text = f"{x:.3f}".rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def to_tikz(f: Diagram) -> str:
    prims, (x0, x1, y0, y1) = layout(f)
    lines = [
        r"\documentclass[tikz]{standalone}",
        r"\begin{document}",
        r"\begin{tikzpicture}[thick]",
    ]
    for p in prims:
        style = TIKZ_DASHES[p.color % len(TIKZ_DASHES)]
        if isinstance(p, Curve):
            (ax, ay), (bx, by), (cx, cy), (dx, dy) = p.points
            lines.append(
                f"  \\draw[{style}] ({_num(ax)},{_num(ay)}) .. controls "
                f"({_num(bx)},{_num(by)}) and ({_num(cx)},{_num(cy)}) .. ({_num(dx)},{_num(dy)});")
        else:
            cx, cy = p.center
            lines.append(f"  \\draw[{style}] ({_num(cx)},{_num(cy)}) circle ({_num(p.radius)});")
    for i in range(len(f.dom)):
        lines.append(f"  \\fill (0,{i}) circle (1.5pt);")
    for j in range(len(f.cod)):
        lines.append(f"  \\fill ({_num(WIDTH)},{j}) circle (1.5pt);")
    lx = _num(x1 + 0.6)
    for row, k in enumerate(colors_used(f)):
        y = _num(y1 - 0.5 * row)
        style = TIKZ_DASHES[k % len(TIKZ_DASHES)]
        lines.append(f"  \\draw[{style}] ({lx},{y}) -- ++(0.6,0) node[right] {{${k}$}};")
    lines += [r"\end{tikzpicture}", r"\end{document}", ""]
    return "\n".join(lines)


def render(f: Diagram, fmt: str) -> str:
    """Text rendering of ``f`` in ``fmt`` (``svg`` or ``tikz``)."""
    if fmt == "svg":
        return to_svg(f)
    if fmt == "tikz":
        return to_tikz(f)
    raise UnsupportedFormatError(f"unsupported format {fmt!r}; choose from {', '.join(FORMATS)}")


def save(f: Diagram, path, fmt: str | None = None) -> Path:
    """Write a rendering to ``path``; the format defaults to the file suffix.

    ``.tex`` gives TikZ; any other suffix matplotlib understands (svg, png,
    pdf) is written through :func:`draw`.
    """
    path = Path(path)
    fmt = fmt or path.suffix.lstrip(".").lower()
    if fmt in ("tikz", "tex"):
        path.write_text(to_tikz(f))
        return path
    if fmt == "svg":
        path.write_text(to_svg(f))
        return path
    if fmt not in ("png", "pdf"):
        raise UnsupportedFormatError(f"cannot write {fmt!r} figures")
    fig = draw(f)
    with matplotlib.rc_context(STYLE):
        fig.savefig(path, format=fmt, metadata={"CreationDate": None} if fmt == "pdf" else None)
    return path
