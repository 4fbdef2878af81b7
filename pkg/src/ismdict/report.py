"""Figure rendering for the build and stats report paths."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .curate import CurationStats, alt_histogram
from .store import Dictionary

__all__ = ["alternatives_histogram_png", "curation_histogram_png"]


def alternatives_histogram_png(d: Dictionary, path) -> Path:
    """Bar chart: how many names carry 1, 2, 3, ... alternatives."""
    hist = alt_histogram(d)
    top = max(hist, default=0)
    xs = list(range(1, top + 1))
    ys = [hist.get(n, 0) for n in xs]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(xs, ys, color="#4878a8")
    ax.set_xlabel("alternatives per name")
    ax.set_ylabel("names")
    ax.set_title("Alternative counts")
    if xs:
        ax.set_xticks(xs)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def curation_histogram_png(st: CurationStats, path) -> Path:
    """Grouped bars: names per alternative-count bucket, before and after."""
    rows = st.bucket_table
    xs = [row.alternatives for row in rows]
    width = 0.4
    fig, ax = plt.subplots(figsize=(8, 4))
    ax.bar([x - width / 2 for x in xs], [row.before for row in rows],
           width=width, label="before", color="#4878a8")
    ax.bar([x + width / 2 for x in xs], [row.after for row in rows],
           width=width, label="after", color="#d8854f")
    ax.set_xlabel("alternatives per name")
    ax.set_ylabel("names")
    ax.set_title("Curation effect on alternative counts")
    if xs:
        ax.set_xticks(xs)
    ax.legend()
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
