"""Interaction-provenance engine for standard UI controls.

Tracks value-changing interactions per widget as an append-only log,
computes frequency/recency aggregates and temporal traces, replays and
recovers historical states, and serializes whole sessions to canonical
JSON for export, injection, and offline meta-analysis.
"""

from .aggregate import AggregateSummary, Bin, aggregate
from .controller import (
    ControllerConfig,
    PendingValue,
    ProvenanceChange,
    WidgetController,
)
from .errors import (
    DomainViolation,
    EmptyLog,
    KindMismatch,
    MalformedDocument,
    NonMonotonicTimestamp,
    NoSuchState,
    ProvenanceError,
    SchemaViolation,
    UnsortedEntries,
)
from .model import (
    InteractionEntry,
    InteractionValue,
    OptionSet,
    OptionsDomain,
    ProvenanceLog,
    Range,
    Scalar,
    SliderDomain,
    Source,
    Text,
    TextDomain,
    ValueDomain,
    WidgetKind,
    current_value,
    record,
    recover,
    same_value,
    set_provenance,
    state_at,
    truncate_last,
)
from .session import (
    SessionDocument,
    WidgetRecord,
    deserialize,
    export_aggregates,
    merge_documents,
    serialize,
)
from .temporal import (
    Interval,
    IntervalTrace,
    SliderTrace,
    TemporalTrace,
    TextTrace,
    temporal_trace,
)

__version__ = "0.1.0"

__all__ = [
    "AggregateSummary",
    "Bin",
    "ControllerConfig",
    "DomainViolation",
    "EmptyLog",
    "InteractionEntry",
    "InteractionValue",
    "Interval",
    "IntervalTrace",
    "KindMismatch",
    "MalformedDocument",
    "NonMonotonicTimestamp",
    "NoSuchState",
    "OptionSet",
    "OptionsDomain",
    "PendingValue",
    "ProvenanceChange",
    "ProvenanceError",
    "ProvenanceLog",
    "Range",
    "Scalar",
    "SchemaViolation",
    "SessionDocument",
    "SliderDomain",
    "SliderTrace",
    "Source",
    "TemporalTrace",
    "Text",
    "TextDomain",
    "TextTrace",
    "UnsortedEntries",
    "ValueDomain",
    "WidgetController",
    "WidgetKind",
    "WidgetRecord",
    "aggregate",
    "current_value",
    "deserialize",
    "export_aggregates",
    "merge_documents",
    "record",
    "recover",
    "same_value",
    "serialize",
    "set_provenance",
    "state_at",
    "temporal_trace",
    "truncate_last",
]
