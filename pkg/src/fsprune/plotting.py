"""Scatter figures for permutation maps and fold profiles.

Only the CSV data files are exact; figures are a convenience.
"""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

_RC = {
    "font.size": 9,
    "axes.labelsize": 9,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "svg.hashsalt": "fsprune",  # stable element ids between runs
    "svg.fonttype": "none",
}


def scatter_permutation(
    panels: Sequence[tuple[str, Sequence[int], Sequence[int]]],
    path: str | Path,
    *,
    square: bool = True,
) -> Path:
    """One scatter panel per ``(title, x, y)``; equal axis scaling when ``square``."""
    path = Path(path)
    with plt.rc_context(_RC):
        fig, axes = plt.subplots(1, len(panels), figsize=(3.5 * len(panels), 3.5), squeeze=False)
        for ax, (title, x, y) in zip(axes[0], panels):
            ax.scatter(x, y, s=1.5, c="k", marker=".", linewidths=0)
            ax.set_title(title)
            ax.set_xlabel("i")
            ax.set_ylabel("pi(i)")
            if square:
                ax.set_aspect("equal", adjustable="box")
        fig.tight_layout()
        fig.savefig(path, metadata={"Date": None} if path.suffix == ".svg" else None)
        plt.close(fig)
    return path


def scatter_profile(l: Sequence[int], g: Sequence[int], path: str | Path, title: str) -> Path:  # noqa: E741
    path = Path(path)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(4.5, 3.2))
        ax.scatter(l, g, s=1.5, c="k", marker=".", linewidths=0)
        ax.set_xlabel("l")
        ax.set_ylabel("g(l)")
        ax.set_title(title)
        fig.tight_layout()
        fig.savefig(path, metadata={"Date": None} if path.suffix == ".svg" else None)
        plt.close(fig)
    return path
