"""Matplotlib rendering for point sets, graphs, and benchmark sweeps.

Output bytes are kept reproducible: the Agg backend is forced, SVG element
ids are salted with a fixed string, and date metadata is stripped.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.collections import LineCollection

from .core import PointSet
from .geograph import GeoGraph

_SVG_SALT = "geospan"


def _savefig(fig, path: str) -> None:
    metadata = {"Date": None} if str(path).endswith(".svg") else None
    with plt.rc_context({"svg.hashsalt": _SVG_SALT}):
        fig.savefig(path, metadata=metadata)
    plt.close(fig)


def save_graph_figure(
    points: PointSet,
    graph: GeoGraph,
    path: str,
    *,
    highlight: tuple[int, int] | None = None,
    title: str | None = None,
) -> None:
    """Draw `graph` on top of `points` and write the figure to `path`.

    Sets with more than two coordinates are projected onto the first two
    axes. `highlight`, if given, is a vertex pair drawn as a dashed chord
    (typically the dilation argmax).
    """
    xy = points.as_array()[:, :2]
    fig, ax = plt.subplots(figsize=(6.0, 6.0))
    segments = [(xy[i], xy[j]) for i, j in graph.edges]
    ax.add_collection(LineCollection(segments, colors="tab:blue", linewidths=1.0))
    ax.scatter(xy[:, 0], xy[:, 1], s=18.0, c="black", zorder=3)
    if highlight is not None:
        u, v = highlight
        ax.plot(
            [xy[u, 0], xy[v, 0]],
            [xy[u, 1], xy[v, 1]],
            color="tab:red",
            linestyle="--",
            linewidth=1.4,
            zorder=4,
        )
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.margins(0.08)
    fig.tight_layout()
    _savefig(fig, path)


def save_bench_figure(rows: list[dict], path: str) -> None:
    """Plot a benchmark sweep: dilation and edge count against k.

    `rows` are the dict rows of the bench CSV (keys n, k, algo, edges,
    dilation). One line per (algo, n) pair.
    """
    series: dict[tuple[str, int], list[dict]] = {}
    for row in rows:
        series.setdefault((str(row["algo"]), int(row["n"])), []).append(row)

    fig, (ax_d, ax_e) = plt.subplots(1, 2, figsize=(10.0, 4.2))
    for (algo, n), bucket in sorted(series.items()):
        bucket.sort(key=lambda r: int(r["k"]))
        ks = [int(r["k"]) for r in bucket]
        ax_d.plot(ks, [float(r["dilation"]) for r in bucket], marker="o", label=f"{algo} n={n}")
        ax_e.plot(ks, [int(r["edges"]) for r in bucket], marker="o", label=f"{algo} n={n}")
    for ax, ylabel in ((ax_d, "dilation"), (ax_e, "edges")):
        ax.set_xlabel("k")
        ax.set_ylabel(ylabel)
        ax.grid(True, alpha=0.3)
    ax_d.legend(fontsize="small")
    fig.tight_layout()
    _savefig(fig, path)
