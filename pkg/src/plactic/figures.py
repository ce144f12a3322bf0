"""Matplotlib renderings of crystal graphs and cyclage graphs.

Vertices are drawn as small French tableaux on levels: depth below the
Yamanouchi tableau for crystal graphs, cocharge for cyclage graphs.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .crystal import CrystalGraph  # noqa: E402
from .cyclage import CyclageGraph  # noqa: E402
from .orbits import orbits_of_shape  # noqa: E402
from .tableaux import Tableau, partition_norm  # noqa: E402

EDGE_COLORS = ["tab:blue", "tab:red", "tab:green", "tab:purple", "tab:orange", "tab:brown"]


def _layout(levels: Sequence[int]) -> list[tuple[float, float]]:
    by_level: dict[int, list[int]] = {}
    for k, lv in enumerate(levels):
        by_level.setdefault(lv, []).append(k)
    pos: list[tuple[float, float]] = [(0.0, 0.0)] * len(levels)
    for lv, ks in by_level.items():
        for j, k in enumerate(ks):
            pos[k] = (j - (len(ks) - 1) / 2, -float(lv))
    return pos


def _draw_tableau(ax, t: Tableau, x: float, y: float, cell: float, face: str = "white") -> None:
    width = len(t.rows[0]) if t.rows else 1
    height = len(t.rows)
    x0 = x - width * cell / 2
    y0 = y - height * cell / 2
    for r, row in enumerate(t.rows):
        for c, v in enumerate(row):
            ax.add_patch(
                plt.Rectangle((x0 + c * cell, y0 + r * cell), cell, cell, facecolor=face, edgecolor="black", lw=0.6, zorder=3)
            )
            ax.text(x0 + (c + 0.5) * cell, y0 + (r + 0.5) * cell, str(v), ha="center", va="center", fontsize=7, zorder=4)


def _draw(graph_vertices, edges, levels, path, title, faces=None, label_levels=None):
    pos = _layout(levels)
    xs = [p[0] for p in pos]
    span = (max(xs) - min(xs)) if xs else 1
    depth = max(levels, default=0)
    fig, ax = plt.subplots(figsize=(max(4.0, 1.4 * (span + 2)), max(3.0, 1.3 * (depth + 2))))
    cell = 0.12
    for s, c, t in edges:
        (x1, y1), (x2, y2) = pos[s], pos[t]
        ax.annotate(
            "",
            xy=(x2, y2 + 0.2 * (1 if y2 < y1 else -1)),
            xytext=(x1, y1 - 0.2 * (1 if y2 < y1 else -1)),
            arrowprops=dict(arrowstyle="->", color=EDGE_COLORS[(c - 1) % len(EDGE_COLORS)], lw=1.0),
            zorder=1,
        )
        ax.text(0.65 * x1 + 0.35 * x2 + 0.05, 0.65 * y1 + 0.35 * y2, str(c), fontsize=7, color=EDGE_COLORS[(c - 1) % len(EDGE_COLORS)])
    for k, t in enumerate(graph_vertices):
        _draw_tableau(ax, t, *pos[k], cell, faces[k] if faces else "white")
    if label_levels:
        for lv, text in label_levels.items():
            ax.text(min(xs) - 1.0, -lv, text, fontsize=8, va="center")
    ax.set_xlim(min(xs) - 1.3, max(xs) + 1.0)
    ax.set_ylim(-depth - 0.8, 0.8)
    ax.set_aspect("equal")
    ax.axis("off")
    ax.set_title(title, fontsize=10)
    fig.tight_layout()
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_crystal(g: CrystalGraph, path, color_orbits: bool = False) -> Path:
    top = partition_norm(g.shape)
    levels = [partition_norm(t.weight) - top for t in g.vertices]
    faces = None
    if color_orbits:
        palette = ["#fde0dd", "#deebf7", "#e5f5e0", "#fff7bc", "#efedf5", "#fee6ce", "#f0f0f0"]
        owner = {}
        for k, o in enumerate(orbits_of_shape(g.shape, g.rank)):
            for t in o.members:
                owner[t] = palette[k % len(palette)]
        faces = [owner[t] for t in g.vertices]
    title = f"crystal graph of shape {g.shape}, rank {g.rank}"
    return _draw(g.vertices, g.edges, levels, path, title, faces)


def plot_cyclage(g: CyclageGraph, path, tree: bool = False) -> Path:
    top = max(g.cocharges, default=0)
    levels = [top - c for c in g.cocharges]
    edges = g.tree_edges() if tree else g.edges
    label_levels = {top - c: f"co={c}" for c in set(g.cocharges)}
    title = f"cyclage {'tree' if tree else 'graph'} of weight {tuple(x for x in g.weight if x)}"
    return _draw(g.vertices, edges, levels, path, title, label_levels=label_levels)
