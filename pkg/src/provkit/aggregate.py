"""Frequency/recency aggregation of a provenance log.

Frequency counts how many times a bin was input; recency is the bin's
last-interaction timestamp plus its dense rank (1 = most recent, ties
share a rank). Bin keys are snapped step values for sliders, option ids
for selection-type widgets, and distinct strings for text.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyLog
from .model import (
    OPTION_KINDS,
    OptionSet,
    OptionsDomain,
    ProvenanceLog,
    Range,
    Scalar,
    SliderDomain,
    Text,
    ValueDomain,
    WidgetKind,
)

BinKey = float | str


@dataclass(frozen=True, slots=True)
class Bin:
    key: BinKey
    frequency: int
    last_ts: int


@dataclass(frozen=True, slots=True)
class AggregateSummary:
    kind: WidgetKind
    bins: tuple[Bin, ...]
    recency_rank: dict[BinKey, int]

    def frequency(self, key: BinKey) -> int:
        for b in self.bins:
            if b.key == key:
                return b.frequency
        return 0


def _dense_ranks(last_ts: dict[BinKey, int]) -> dict[BinKey, int]:
    distinct = sorted(set(last_ts.values()), reverse=True)
    rank_of_ts = {ts: i + 1 for i, ts in enumerate(distinct)}
    return {k: rank_of_ts[ts] for k, ts in last_ts.items()}


def aggregate(log: ProvenanceLog, domain: ValueDomain) -> AggregateSummary:
    """Per-bin frequency and last-interaction timestamp; empty bins omitted."""
    if log.empty:
        raise EmptyLog(f"cannot aggregate an empty {log.kind.value} log")

    freq: dict[BinKey, int] = {}
    last: dict[BinKey, int] = {}

    if log.kind is WidgetKind.SINGLE_SLIDER:
        assert isinstance(domain, SliderDomain)
        for e in log.entries:
            assert isinstance(e.value, Scalar)
            key = domain.snap(e.value.value)
            freq[key] = freq.get(key, 0) + 1
            last[key] = e.timestamp
    elif log.kind is WidgetKind.RANGE_SLIDER:
        assert isinstance(domain, SliderDomain)
        grid = domain.grid()
        index = {g: i for i, g in enumerate(grid)}
        snap = domain.snap
        spans = []
        # coverage counts via a difference array: O(entries + bins)
        diff = [0] * (len(grid) + 1)
        for e in log.entries:
            assert isinstance(e.value, Range)
            lo = index[snap(e.value.low)]
            hi = index[snap(e.value.high)]
            spans.append((lo, hi, e.timestamp))
            diff[lo] += 1
            diff[hi + 1] -= 1
        # last-touch timestamps: sweep newest-first, assigning each bin once;
        # nxt[i] points at the next still-unassigned index at or after i
        stamps = [0] * len(grid)
        nxt = list(range(len(grid) + 1))

        def find(i: int) -> int:
            root = i
            while nxt[root] != root:
                root = nxt[root]
            while nxt[i] != root:
                nxt[i], i = root, nxt[i]
            return root

        for lo, hi, ts in reversed(spans):
            i = find(lo)
            while i <= hi:
                stamps[i] = ts
                nxt[i] = i + 1
                i = find(i + 1)
        running = 0
        for i, g in enumerate(grid):
            running += diff[i]
            if running:
                freq[g] = running
                last[g] = stamps[i]
    elif log.kind in OPTION_KINDS:
        assert isinstance(domain, OptionsDomain)
        for e in log.entries:
            assert isinstance(e.value, OptionSet)
            for oid in e.value.ids:
                freq[oid] = freq.get(oid, 0) + 1
                last[oid] = e.timestamp
    else:  # input text
        for e in log.entries:
            assert isinstance(e.value, Text)
            key = e.value.text
            freq[key] = freq.get(key, 0) + 1
            last[key] = e.timestamp

    # keys are homogeneous per kind, so plain sort gives the stable output order
    bins = tuple(Bin(key, freq[key], last[key]) for key in sorted(freq))
    return AggregateSummary(log.kind, bins, _dense_ranks(last))
