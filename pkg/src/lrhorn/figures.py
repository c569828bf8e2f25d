"""Render domino tableaux and sampling reports to image files.

The CLI report paths write these figures next to their delimited text
output.  matplotlib is imported lazily with the Agg backend so the rest of
the library stays import-light.
"""

from __future__ import annotations

import os

from .domino import DominoTableau, reading_word


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def render_tableau(t: DominoTableau, path: str, title: str | None = None) -> str:
    """Draw one tableau, English orientation, one rectangle per domino."""
    plt = _pyplot()
    from matplotlib.patches import Rectangle

    rows = len(t.shape)
    cols = t.shape[0] if t.shape else 0
    fig, ax = plt.subplots(figsize=(max(cols * 0.5, 1.2), max(rows * 0.5, 1.2)))
    for d in t.dominoes:
        if d.horizontal:
            rect = Rectangle((d.col - 1, -d.row), 2, 1)
            cx, cy = d.col, -d.row + 0.5
        else:
            rect = Rectangle((d.col - 1, -d.row - 1), 1, 2)
            cx, cy = d.col - 0.5, -d.row
        rect.set_facecolor("#f5efe0")
        rect.set_edgecolor("black")
        rect.set_linewidth(1.4)
        ax.add_patch(rect)
        ax.text(cx, cy, str(d.label), ha="center", va="center", fontsize=12)
    ax.set_xlim(-0.2, max(cols, 1) + 0.2)
    ax.set_ylim(-max(rows, 1) - 0.2, 0.2)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=10)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return path


def render_tableaux(tableaux, directory: str, prefix: str = "ydt") -> list[str]:
    """One numbered image per tableau; returns the written paths."""
    os.makedirs(directory, exist_ok=True)
    paths = []
    for i, t in enumerate(tableaux, start=1):
        word = "".join(str(x) for x in reading_word(t))
        path = os.path.join(directory, f"{prefix}_{i:03d}.png")
        render_tableau(t, path, title=f"word {word}")
        paths.append(path)
    return paths


def render_margin_histogram(report, path: str) -> str:
    """Histogram of the per-trial worst margins of a sampling run."""
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 3))
    ax.hist(report.margins, bins=40, color="#4878a8")
    ax.axvline(0.0, color="black", linewidth=1)
    ax.set_xlabel("worst margin per trial")
    ax.set_ylabel("trials")
    ax.set_title(f"{report.kind} p={report.p} n={report.n} "
                 f"trials={report.trials} seed={report.seed}", fontsize=9)
    fig.savefig(path, bbox_inches="tight", dpi=150)
    plt.close(fig)
    return path
