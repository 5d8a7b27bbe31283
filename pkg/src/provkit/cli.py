"""Offline meta-analysis CLI over exported .provjson sessions.

Every command is a pure function of its input files: identical inputs give
byte-identical stdout. Exit codes: 0 ok, 1 data error, 2 usage error.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .aggregate import aggregate
from .errors import ProvenanceError
from .model import state_at, truncate_last
from .session import (
    SessionDocument,
    deserialize,
    export_aggregates,
    merge_documents,
    serialize,
    value_to_json,
)
from .temporal import IntervalTrace, SliderTrace, temporal_trace


def _load(path: str) -> SessionDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(1)
    try:
        return deserialize(text)
    except ProvenanceError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(1)


@click.group()
def main() -> None:
    """Analyze exported interaction-provenance sessions."""


@main.command()
@click.argument("file", type=click.Path())
def validate(file: str) -> None:
    """Check FILE against the session schema."""
    doc = _load(file)
    click.echo(f"ok: {len(doc.widgets)} widget(s)")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def summarize(file: str, as_json: bool) -> None:
    """Per-widget frequency/recency bins."""
    doc = _load(file)
    if as_json:
        click.echo(export_aggregates(doc))
        return
    for wid in sorted(doc.widgets):
        rec = doc.widgets[wid]
        if rec.log.empty:
            continue
        summary = aggregate(rec.log, rec.domain)
        for b in summary.bins:
            rank = summary.recency_rank[b.key]
            click.echo(
                f"{wid}\t{b.key}\tfreq {b.frequency}\tlast {b.last_ts}\trank {rank}"
            )


@main.command()
@click.argument("file", type=click.Path())
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def trace(file: str, as_json: bool) -> None:
    """Per-widget temporal traces."""
    doc = _load(file)
    if as_json:
        click.echo(export_aggregates(doc))
        return
    for wid in sorted(doc.widgets):
        rec = doc.widgets[wid]
        if rec.log.empty:
            continue
        t = temporal_trace(rec.log)
        if isinstance(t, SliderTrace):
            for series, name in zip(t.series, ("low", "high")):
                label = f" {name}" if len(t.series) > 1 else ""
                pts = " ".join(f"{ts}:{v}" for ts, v in series)
                click.echo(f"{wid}{label}\t{pts}")
        elif isinstance(t, IntervalTrace):
            for oid, ivs in t.per_option:
                spans = " ".join(
                    f"[{iv.start},{'open' if iv.end is None else iv.end})"
                    for iv in ivs
                )
                click.echo(f"{wid}\t{oid}\t{spans}")
        else:
            for ts, text in t.items:
                click.echo(f"{wid}\t{ts}\t{text}")


@main.command()
@click.argument("file", type=click.Path())
@click.option("--at", "ts", type=int, required=True, help="Timestamp to replay to.")
@click.option("--json", "as_json", is_flag=True, help="Machine-readable output.")
def replay(file: str, ts: int, as_json: bool) -> None:
    """Per-widget state at a point in time."""
    doc = _load(file)
    states = {
        wid: state_at(rec.log, ts) for wid, rec in sorted(doc.widgets.items())
    }
    if as_json:
        payload = {
            wid: (None if v is None else value_to_json(v))
            for wid, v in states.items()
        }
        click.echo(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        return
    for wid, v in states.items():
        shown = "none" if v is None else json.dumps(value_to_json(v))
        click.echo(f"{wid}\t{shown}")


@main.command()
@click.argument("files", type=click.Path(), nargs=-1, required=True)
@click.option("-o", "--output", type=click.Path(), help="Write merged session here.")
def merge(files: tuple[str, ...], output: str | None) -> None:
    """Merge sessions; matching widgets' histories are combined."""
    docs = [_load(f) for f in files]
    try:
        merged = merge_documents(docs)
    except ProvenanceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    text = serialize(merged)
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text)


@main.command()
@click.argument("file", type=click.Path())
@click.option("--keep", type=int, required=True, help="Entries to keep per widget.")
@click.option("-o", "--output", type=click.Path(), help="Write result here.")
def truncate(file: str, keep: int, output: str | None) -> None:
    """Keep only each widget's most recent entries."""
    if keep < 1:
        raise click.UsageError("--keep must be >= 1")
    doc = _load(file)
    for wid, rec in doc.widgets.items():
        doc.widgets[wid] = rec.__class__(
            kind=rec.kind,
            domain=rec.domain,
            config=rec.config,
            log=truncate_last(rec.log, keep),
        )
    text = serialize(doc)
    if output:
        Path(output).write_text(text)
    else:
        click.echo(text)


@main.command()
@click.argument("file", type=click.Path())
@click.option(
    "--out-dir",
    type=click.Path(file_okay=False),
    default="report",
    show_default=True,
    help="Directory for figures and CSV.",
)
def report(file: str, out_dir: str) -> None:
    """Render aggregate/temporal figures plus a bins CSV."""
    from .report import write_report  # matplotlib import kept off other commands

    doc = _load(file)
    for path in write_report(doc, Path(out_dir)):
        click.echo(str(path))


if __name__ == "__main__":
    main()
