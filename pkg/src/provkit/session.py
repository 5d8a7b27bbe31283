"""Canonical JSON serialization of sessions (.provjson files).

One document holds every tracked widget: its kind, value domain, controller
config, and full provenance log. `serialize` is canonical (sorted keys,
compact separators) so equal documents produce identical bytes. The
`revalidate` flag is an instruction and is never serialized as true.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Any

from .aggregate import aggregate
from .controller import ControllerConfig
from .errors import KindMismatch, MalformedDocument, SchemaViolation
from .model import (
    InteractionEntry,
    InteractionValue,
    OPTION_KINDS,
    OptionSet,
    OptionsDomain,
    ProvenanceLog,
    Range,
    Scalar,
    SLIDER_KINDS,
    SliderDomain,
    Source,
    Text,
    TextDomain,
    ValueDomain,
    WidgetKind,
    validate_value,
)
from .temporal import IntervalTrace, SliderTrace, TextTrace, temporal_trace

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class WidgetRecord:
    kind: WidgetKind
    domain: ValueDomain
    config: ControllerConfig
    log: ProvenanceLog


@dataclass
class SessionDocument:
    widgets: dict[str, WidgetRecord] = field(default_factory=dict)
    version: str = SCHEMA_VERSION

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SessionDocument):
            return NotImplemented
        return self.version == other.version and self.widgets == other.widgets


def _num(x: float) -> int | float:
    """Canonical number form: integral floats serialize as ints."""
    if isinstance(x, float) and x.is_integer():
        return int(x)
    return x


def value_to_json(value: InteractionValue) -> Any:
    if isinstance(value, Scalar):
        return _num(value.value)
    if isinstance(value, Range):
        return [_num(value.low), _num(value.high)]
    if isinstance(value, OptionSet):
        return list(value.ids)
    return value.text


def entry_to_json(entry: InteractionEntry) -> dict[str, Any]:
    return {
        "value": value_to_json(entry.value),
        "timestamp": entry.timestamp,
        "source": entry.source.value,
    }


def log_to_json(log: ProvenanceLog) -> dict[str, Any]:
    return {
        "revalidate": False,
        "entries": [entry_to_json(e) for e in log.entries],
    }


def _domain_to_json(domain: ValueDomain) -> Any:
    if isinstance(domain, SliderDomain):
        return {
            "floor": _num(domain.floor),
            "ceil": _num(domain.ceil),
            "step": _num(domain.step),
        }
    if isinstance(domain, OptionsDomain):
        return {"options": [{"id": i, "label": l} for i, l in domain.options]}
    return None


def _config_to_json(config: ControllerConfig) -> dict[str, Any]:
    return {
        "mode": config.mode,
        "period_ms": config.period_ms,
        "freeze": config.freeze,
        "visualize": config.visualize,
        "label": config.label,
    }


def document_to_json(doc: SessionDocument) -> dict[str, Any]:
    return {
        "version": doc.version,
        "widgets": {
            wid: {
                "kind": rec.kind.value,
                "domain": _domain_to_json(rec.domain),
                "config": _config_to_json(rec.config),
                "log": log_to_json(rec.log),
            }
            for wid, rec in doc.widgets.items()
        },
    }


def serialize(doc: SessionDocument) -> str:
    """Canonical JSON: deterministic bytes for structurally equal documents."""
    return json.dumps(document_to_json(doc), sort_keys=True, separators=(",", ":"))


def _value_from_json(
    kind: WidgetKind, raw: Any, where: str
) -> InteractionValue:
    try:
        if kind is WidgetKind.SINGLE_SLIDER:
            if not isinstance(raw, (int, float)) or isinstance(raw, bool):
                raise SchemaViolation(f"{where}: expected a number, got {raw!r}")
            return Scalar(float(raw))
        if kind is WidgetKind.RANGE_SLIDER:
            if (
                not isinstance(raw, list)
                or len(raw) != 2
                or not all(isinstance(x, (int, float)) for x in raw)
            ):
                raise SchemaViolation(f"{where}: expected [low, high], got {raw!r}")
            return Range(float(raw[0]), float(raw[1]))
        if kind in OPTION_KINDS:
            if not isinstance(raw, list) or not all(
                isinstance(x, str) for x in raw
            ):
                raise SchemaViolation(
                    f"{where}: expected a list of option ids, got {raw!r}"
                )
            return OptionSet(tuple(raw))
        if not isinstance(raw, str):
            raise SchemaViolation(f"{where}: expected a string, got {raw!r}")
        return Text(raw)
    except SchemaViolation:
        raise
    except Exception as exc:
        raise SchemaViolation(f"{where}: {exc}") from exc


def _domain_from_json(kind: WidgetKind, raw: Any, where: str) -> ValueDomain:
    try:
        if kind in SLIDER_KINDS:
            if not isinstance(raw, dict) or set(raw) != {"floor", "ceil", "step"}:
                raise SchemaViolation(
                    f"{where}: slider domain needs floor/ceil/step, got {raw!r}"
                )
            return SliderDomain(raw["floor"], raw["ceil"], raw["step"])
        if kind in OPTION_KINDS:
            if not isinstance(raw, dict) or "options" not in raw:
                raise SchemaViolation(f"{where}: option domain needs options list")
            return OptionsDomain(
                tuple((o["id"], o["label"]) for o in raw["options"])
            )
        if raw is not None:
            raise SchemaViolation(f"{where}: text widgets take no domain")
        return TextDomain()
    except SchemaViolation:
        raise
    except Exception as exc:
        raise SchemaViolation(f"{where}: {exc}") from exc


def _config_from_json(raw: Any, where: str) -> ControllerConfig:
    if not isinstance(raw, dict):
        raise SchemaViolation(f"{where}: config must be an object")
    mode = raw.get("mode", "interaction")
    if mode not in ("interaction", "time"):
        raise SchemaViolation(f"{where}: unknown mode {mode!r}")
    period = raw.get("period_ms", 1000)
    if not isinstance(period, int) or period < 1:
        raise SchemaViolation(f"{where}: period_ms must be a positive integer")
    label = raw.get("label")
    if label is not None and not isinstance(label, str):
        raise SchemaViolation(f"{where}: label must be a string or null")
    return ControllerConfig(
        mode=mode,
        period_ms=period,
        freeze=bool(raw.get("freeze", False)),
        visualize=bool(raw.get("visualize", True)),
        label=label,
    )


def deserialize(text: str) -> SessionDocument:
    """Parse and fully validate a session document.

    Every log invariant is checked here; a document that deserializes is
    safe to hand to any engine operation.
    """
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedDocument(f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise SchemaViolation("top level must be an object")
    version = raw.get("version")
    if version != SCHEMA_VERSION:
        raise SchemaViolation(f"unknown schema version {version!r}")
    widgets_raw = raw.get("widgets")
    if not isinstance(widgets_raw, dict):
        raise SchemaViolation("'widgets' must be an object")

    widgets: dict[str, WidgetRecord] = {}
    for wid, wraw in widgets_raw.items():
        where = f"widget {wid!r}"
        if not isinstance(wraw, dict):
            raise SchemaViolation(f"{where}: must be an object")
        try:
            kind = WidgetKind(wraw.get("kind"))
        except ValueError:
            raise SchemaViolation(
                f"{where}: unknown kind {wraw.get('kind')!r}"
            ) from None
        domain = _domain_from_json(kind, wraw.get("domain"), where)
        config = _config_from_json(wraw.get("config", {}), where)
        log_raw = wraw.get("log")
        if not isinstance(log_raw, dict):
            raise SchemaViolation(f"{where}: log must be an object")
        entries_raw = log_raw.get("entries")
        if not isinstance(entries_raw, list):
            raise SchemaViolation(f"{where}: log entries must be a list")

        entries: list[InteractionEntry] = []
        prev_ts: int | None = None
        for i, eraw in enumerate(entries_raw):
            ewhere = f"{where}, entry {i}"
            if not isinstance(eraw, dict) or "value" not in eraw:
                raise SchemaViolation(f"{ewhere}: expected an entry object")
            ts = eraw.get("timestamp")
            if not isinstance(ts, int) or isinstance(ts, bool) or ts < 0:
                raise SchemaViolation(
                    f"{ewhere}: timestamp must be a non-negative integer"
                )
            if prev_ts is not None and ts < prev_ts:
                raise SchemaViolation(
                    f"{ewhere}: timestamp {ts} precedes previous entry at {prev_ts}"
                )
            prev_ts = ts
            try:
                source = Source(eraw.get("source", "user"))
            except ValueError:
                raise SchemaViolation(
                    f"{ewhere}: unknown source {eraw.get('source')!r}"
                ) from None
            value = _value_from_json(kind, eraw["value"], ewhere)
            try:
                validate_value(kind, value, domain)
            except Exception as exc:
                raise SchemaViolation(f"{ewhere}: {exc}") from exc
            entries.append(InteractionEntry(value, ts, source))

        widgets[wid] = WidgetRecord(
            kind=kind,
            domain=domain,
            config=config,
            log=ProvenanceLog(
                kind, tuple(entries), bool(log_raw.get("revalidate", False))
            ),
        )
    return SessionDocument(widgets=widgets, version=version)


def _trace_to_json(trace: SliderTrace | IntervalTrace | TextTrace) -> dict[str, Any]:
    if isinstance(trace, SliderTrace):
        return {"series": [[[ts, _num(v)] for ts, v in s] for s in trace.series]}
    if isinstance(trace, IntervalTrace):
        return {
            "intervals": {
                oid: [[iv.start, iv.end] for iv in ivs]
                for oid, ivs in trace.per_option
            }
        }
    return {"items": [[ts, s] for ts, s in trace.items]}


def export_aggregates(doc: SessionDocument) -> str:
    """Per-widget aggregate summary and temporal trace as canonical JSON.

    Widgets with no logged provenance export null blocks.
    """
    out: dict[str, Any] = {"version": doc.version, "widgets": {}}
    for wid in sorted(doc.widgets):
        rec = doc.widgets[wid]
        if rec.log.empty:
            out["widgets"][wid] = {"aggregate": None, "temporal": None}
            continue
        summary = aggregate(rec.log, rec.domain)
        out["widgets"][wid] = {
            "aggregate": {
                "kind": summary.kind.value,
                "bins": [
                    {
                        "key": _num(b.key) if isinstance(b.key, float) else b.key,
                        "frequency": b.frequency,
                        "last_ts": b.last_ts,
                        "rank": summary.recency_rank[b.key],
                    }
                    for b in summary.bins
                ],
            },
            "temporal": _trace_to_json(temporal_trace(rec.log)),
        }
    return json.dumps(out, sort_keys=True, separators=(",", ":"))


def merge_documents(docs: list[SessionDocument]) -> SessionDocument:
    """Concatenate matching widgets' histories into one document.

    Entries are re-sorted by timestamp (stable, so ties keep input order).
    Widgets whose entries actually come from more than one input are
    injected history: their sources are rewritten to External.
    """
    merged: dict[str, WidgetRecord] = {}
    contributors: dict[str, int] = {}
    for doc in docs:
        for wid, rec in doc.widgets.items():
            if wid not in merged:
                merged[wid] = replace(
                    rec, log=ProvenanceLog(rec.kind, rec.log.entries)
                )
                contributors[wid] = 1 if rec.log.entries else 0
                continue
            base = merged[wid]
            if base.kind is not rec.kind:
                raise KindMismatch(
                    f"widget {wid!r}: kind {base.kind.value} vs {rec.kind.value}"
                )
            if base.domain != rec.domain:
                raise KindMismatch(f"widget {wid!r}: domains differ across inputs")
            if rec.log.entries:
                contributors[wid] += 1
            combined = sorted(
                base.log.entries + rec.log.entries, key=lambda e: e.timestamp
            )
            merged[wid] = replace(
                base, log=ProvenanceLog(base.kind, tuple(combined))
            )
    for wid, rec in merged.items():
        if contributors[wid] > 1:
            entries = tuple(
                replace(e, source=Source.EXTERNAL) for e in rec.log.entries
            )
            merged[wid] = replace(rec, log=replace(rec.log, entries=entries))
    return SessionDocument(widgets=dict(sorted(merged.items())))
