"""Figure and delimited-output rendering for session reports.

For every widget with logged provenance the report writes an aggregate
figure (frequency bars colored by recency rank), a temporal figure, and
appends the widget's bins to a shared CSV. Rendering is deterministic:
widgets are processed in sorted id order.
"""

from __future__ import annotations

import csv
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .aggregate import AggregateSummary, aggregate
from .session import SessionDocument
from .temporal import IntervalTrace, SliderTrace, TemporalTrace, temporal_trace

# 5 sequential shades, light to dark; rank 1 (most recent) gets the darkest.
RECENCY_SHADES = ["#fee6ce", "#fdae6b", "#fd8d3c", "#e6550d", "#a63603"]


def recency_color(rank: int, max_rank: int) -> str:
    """Map a dense recency rank onto the sequential palette."""
    if max_rank <= 1:
        return RECENCY_SHADES[-1]
    # rank 1 -> darkest shade, oldest rank -> lightest
    frac = (max_rank - rank) / (max_rank - 1)
    idx = round(frac * (len(RECENCY_SHADES) - 1))
    return RECENCY_SHADES[idx]


def _plot_aggregate(
    summary: AggregateSummary, path: Path, title: str
) -> None:
    keys = [str(b.key) for b in summary.bins]
    freqs = [b.frequency for b in summary.bins]
    max_rank = max(summary.recency_rank.values())
    colors = [
        recency_color(summary.recency_rank[b.key], max_rank) for b in summary.bins
    ]
    fig, ax = plt.subplots(figsize=(max(4, 0.4 * len(keys)), 3))
    ax.bar(range(len(keys)), freqs, color=colors)
    ax.set_xticks(range(len(keys)))
    ax.set_xticklabels(keys, rotation=45, ha="right", fontsize=7)
    ax.set_ylabel("frequency")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def _plot_temporal(trace: TemporalTrace, path: Path, title: str) -> None:
    fig, ax = plt.subplots(figsize=(5, 3))
    if isinstance(trace, SliderTrace):
        for series, label in zip(trace.series, ("low", "high")):
            ts = [t for t, _ in series]
            vs = [v for _, v in series]
            ax.plot(vs, ts, marker="o", label=label if len(trace.series) > 1 else None)
        ax.set_xlabel("value")
        ax.set_ylabel("time (ms)")
        if len(trace.series) > 1:
            ax.legend()
    elif isinstance(trace, IntervalTrace):
        horizon = max(
            (iv.end or iv.start for _, ivs in trace.per_option for iv in ivs),
            default=0,
        )
        for row, (oid, ivs) in enumerate(trace.per_option):
            spans = [
                (iv.start, (iv.end if iv.end is not None else horizon) - iv.start)
                for iv in ivs
            ]
            ax.broken_barh(spans, (row - 0.3, 0.6))
        ax.set_yticks(range(len(trace.per_option)))
        ax.set_yticklabels([oid for oid, _ in trace.per_option])
        ax.set_xlabel("time (ms)")
    else:
        ts = [t for t, _ in trace.items]
        ax.scatter([0] * len(ts), ts)
        for t, text in trace.items:
            ax.annotate(text, (0, t), xytext=(6, 0), textcoords="offset points")
        ax.set_xticks([])
        ax.set_ylabel("time (ms)")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)


def write_report(doc: SessionDocument, out_dir: Path) -> list[Path]:
    """Render figures and the bins CSV; returns the written paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    csv_path = out_dir / "bins.csv"
    with csv_path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["widget", "key", "frequency", "last_ts", "rank"])
        for wid in sorted(doc.widgets):
            rec = doc.widgets[wid]
            if rec.log.empty:
                continue
            summary = aggregate(rec.log, rec.domain)
            for b in summary.bins:
                writer.writerow(
                    [wid, b.key, b.frequency, b.last_ts, summary.recency_rank[b.key]]
                )
    written.append(csv_path)

    for wid in sorted(doc.widgets):
        rec = doc.widgets[wid]
        if rec.log.empty:
            continue
        label = rec.config.label or wid
        summary = aggregate(rec.log, rec.domain)
        agg_path = out_dir / f"{wid}_aggregate.png"
        _plot_aggregate(summary, agg_path, f"{label}: frequency / recency")
        written.append(agg_path)
        tmp_path = out_dir / f"{wid}_temporal.png"
        _plot_temporal(temporal_trace(rec.log), tmp_path, f"{label}: history")
        written.append(tmp_path)
    return written
