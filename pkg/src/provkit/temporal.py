"""Temporal traces: the time-ordered evolution of a widget's states.

Sliders map to point series (one per handle), selection-type widgets to
per-option selection intervals, and text inputs to a timeline of strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import EmptyLog
from .model import (
    OPTION_KINDS,
    OptionSet,
    ProvenanceLog,
    Range,
    Scalar,
    Text,
    WidgetKind,
)

TimePoint = tuple[int, float]


@dataclass(frozen=True)
class SliderTrace:
    """One (ts, value) series for a single slider; (low, high) for a range."""

    series: tuple[tuple[TimePoint, ...], ...]


@dataclass(frozen=True)
class Interval:
    """Selection span [start, end); end=None means still selected."""

    start: int
    end: int | None


@dataclass(frozen=True)
class IntervalTrace:
    per_option: tuple[tuple[str, tuple[Interval, ...]], ...]

    def intervals_of(self, oid: str) -> tuple[Interval, ...]:
        for o, ivs in self.per_option:
            if o == oid:
                return ivs
        return ()


@dataclass(frozen=True)
class TextTrace:
    items: tuple[tuple[int, str], ...]


TemporalTrace = Union[SliderTrace, IntervalTrace, TextTrace]


def temporal_trace(log: ProvenanceLog) -> TemporalTrace:
    if log.empty:
        raise EmptyLog(f"cannot trace an empty {log.kind.value} log")

    if log.kind is WidgetKind.SINGLE_SLIDER:
        points = tuple(
            (e.timestamp, e.value.value)
            for e in log.entries
            if isinstance(e.value, Scalar)
        )
        return SliderTrace(series=(points,))

    if log.kind is WidgetKind.RANGE_SLIDER:
        low = []
        high = []
        for e in log.entries:
            assert isinstance(e.value, Range)
            low.append((e.timestamp, e.value.low))
            high.append((e.timestamp, e.value.high))
        return SliderTrace(series=(tuple(low), tuple(high)))

    if log.kind in OPTION_KINDS:
        return _option_intervals(log)

    items = tuple(
        (e.timestamp, e.value.text) for e in log.entries if isinstance(e.value, Text)
    )
    return TextTrace(items=items)


def _option_intervals(log: ProvenanceLog) -> IntervalTrace:
    """Derive per-option [selected-at, deselected-at) spans from the entries.

    Contiguous membership across entries merges into one interval; an option
    still selected in the final entry gets an open interval.
    """
    open_since: dict[str, int] = {}
    closed: dict[str, list[Interval]] = {}
    order: list[str] = []  # first-seen order, for deterministic output

    for e in log.entries:
        assert isinstance(e.value, OptionSet)
        selected = e.value.as_set()
        for oid in list(open_since):
            if oid not in selected:
                closed.setdefault(oid, []).append(
                    Interval(open_since.pop(oid), e.timestamp)
                )
        for oid in e.value.ids:
            if oid not in open_since:
                open_since[oid] = e.timestamp
                if oid not in order:
                    order.append(oid)

    for oid, start in open_since.items():
        closed.setdefault(oid, []).append(Interval(start, None))

    return IntervalTrace(
        per_option=tuple((oid, tuple(closed[oid])) for oid in order)
    )
