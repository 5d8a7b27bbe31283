"""Core data model: widget kinds, interaction values, domains, and logs.

All log operations are pure: they take a log and return a new log, never
mutating their arguments. Timestamps are integer milliseconds since the
Unix epoch and must be non-decreasing within a log.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import Union

from .errors import (
    DomainViolation,
    KindMismatch,
    NonMonotonicTimestamp,
    NoSuchState,
    UnsortedEntries,
)


class WidgetKind(str, Enum):
    SINGLE_SLIDER = "single-slider"
    RANGE_SLIDER = "range-slider"
    DROPDOWN = "dropdown"
    MULTISELECT = "multiselect"
    RADIO_BUTTON = "radiobutton"
    CHECKBOX = "checkbox"
    INPUT_TEXT = "inputtext"


#: Kinds whose selection holds at most one option id.
SINGLE_CHOICE_KINDS = frozenset({WidgetKind.DROPDOWN, WidgetKind.RADIO_BUTTON})
#: Kinds whose selection may hold any number of option ids.
MULTI_CHOICE_KINDS = frozenset({WidgetKind.MULTISELECT, WidgetKind.CHECKBOX})
OPTION_KINDS = SINGLE_CHOICE_KINDS | MULTI_CHOICE_KINDS
SLIDER_KINDS = frozenset({WidgetKind.SINGLE_SLIDER, WidgetKind.RANGE_SLIDER})


class Source(str, Enum):
    USER = "user"
    RECOVERY = "recovery"
    EXTERNAL = "external"


@dataclass(frozen=True, slots=True)
class Scalar:
    """Single-slider value."""

    value: float


@dataclass(frozen=True, slots=True)
class Range:
    """Range-slider value; low <= high."""

    low: float
    high: float

    def __post_init__(self) -> None:
        if self.low > self.high:
            raise DomainViolation(f"range low {self.low} exceeds high {self.high}")


@dataclass(frozen=True, slots=True)
class OptionSet:
    """Selection of option ids, insertion-ordered and distinct."""

    ids: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.ids)) != len(self.ids):
            raise DomainViolation(f"duplicate option ids in {self.ids!r}")

    def as_set(self) -> frozenset[str]:
        return frozenset(self.ids)


@dataclass(frozen=True, slots=True)
class Text:
    """Input-text value; matched case-sensitively when aggregating."""

    text: str


InteractionValue = Union[Scalar, Range, OptionSet, Text]

_VALUE_TYPE_BY_KIND: dict[WidgetKind, type] = {
    WidgetKind.SINGLE_SLIDER: Scalar,
    WidgetKind.RANGE_SLIDER: Range,
    WidgetKind.DROPDOWN: OptionSet,
    WidgetKind.MULTISELECT: OptionSet,
    WidgetKind.RADIO_BUTTON: OptionSet,
    WidgetKind.CHECKBOX: OptionSet,
    WidgetKind.INPUT_TEXT: Text,
}


def value_type_for(kind: WidgetKind) -> type:
    return _VALUE_TYPE_BY_KIND[kind]


def same_value(a: InteractionValue, b: InteractionValue) -> bool:
    """Semantic equality; option selections compare as sets."""
    if isinstance(a, OptionSet) and isinstance(b, OptionSet):
        return a.as_set() == b.as_set()
    return a == b


@dataclass(frozen=True, slots=True)
class SliderDomain:
    """Numeric domain: values live in [floor, ceil] on a step grid.

    If step does not divide (ceil - floor) the final grid point is ceil
    itself, clipping the last bin.
    """

    floor: float
    ceil: float
    step: float

    def __post_init__(self) -> None:
        if not self.floor < self.ceil:
            raise DomainViolation(f"floor {self.floor} must be < ceil {self.ceil}")
        if self.step <= 0:
            raise DomainViolation(f"step must be positive, got {self.step}")

    def grid(self) -> list[float]:
        """All bin keys, ascending."""
        n = math.floor((self.ceil - self.floor) / self.step + 1e-9)
        points = [round(self.floor + i * self.step, 12) for i in range(n + 1)]
        if points[-1] < self.ceil:
            points.append(self.ceil)
        return points

    def snap(self, v: float) -> float:
        """Nearest grid value to v (ties resolve downward)."""
        if v <= self.floor:
            return self.floor
        if v >= self.ceil:
            return self.ceil
        k = (v - self.floor) / self.step
        lo = round(self.floor + math.floor(k) * self.step, 12)
        hi = round(self.floor + math.ceil(k) * self.step, 12)
        best, dist = lo, v - lo
        if hi <= self.ceil and hi - v < dist:
            best, dist = hi, hi - v
        if self.ceil - v < dist:  # off-grid ceil can be the nearest point
            best = self.ceil
        return best

    def contains(self, v: float) -> bool:
        return self.floor <= v <= self.ceil


@dataclass(frozen=True, slots=True)
class OptionsDomain:
    """Ordered option list for selection-type widgets."""

    options: tuple[tuple[str, str], ...]  # (id, display label)

    def __post_init__(self) -> None:
        ids = [oid for oid, _ in self.options]
        if len(set(ids)) != len(ids):
            raise DomainViolation("option ids must be unique")

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(oid for oid, _ in self.options)

    def label_of(self, oid: str) -> str:
        for i, label in self.options:
            if i == oid:
                return label
        raise KeyError(oid)


@dataclass(frozen=True, slots=True)
class TextDomain:
    """Free text: no constraints."""


ValueDomain = Union[SliderDomain, OptionsDomain, TextDomain]


@dataclass(frozen=True, slots=True)
class InteractionEntry:
    value: InteractionValue
    timestamp: int
    source: Source = Source.USER

    def __post_init__(self) -> None:
        if self.timestamp < 0:
            raise DomainViolation(f"negative timestamp {self.timestamp}")


@dataclass(frozen=True, slots=True)
class ProvenanceLog:
    """Append-only interaction history for one widget."""

    kind: WidgetKind
    entries: tuple[InteractionEntry, ...] = ()
    revalidate: bool = False

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def empty(self) -> bool:
        return not self.entries


def validate_value(
    kind: WidgetKind, value: InteractionValue, domain: ValueDomain | None = None
) -> None:
    """Raise KindMismatch/DomainViolation if value is not usable for kind."""
    expected = _VALUE_TYPE_BY_KIND[kind]
    if not isinstance(value, expected):
        raise KindMismatch(
            f"{kind.value} expects {expected.__name__}, got {type(value).__name__}"
        )
    if isinstance(value, OptionSet):
        if kind in SINGLE_CHOICE_KINDS and len(value.ids) > 1:
            raise DomainViolation(
                f"{kind.value} admits at most one selected option, got {len(value.ids)}"
            )
        if isinstance(domain, OptionsDomain):
            known = set(domain.ids)
            for oid in value.ids:
                if oid not in known:
                    raise DomainViolation(f"unknown option id {oid!r}")
    elif isinstance(value, Scalar):
        if isinstance(domain, SliderDomain) and not domain.contains(value.value):
            raise DomainViolation(
                f"scalar {value.value} outside [{domain.floor}, {domain.ceil}]"
            )
    elif isinstance(value, Range):
        if isinstance(domain, SliderDomain) and not (
            domain.contains(value.low) and domain.contains(value.high)
        ):
            raise DomainViolation(
                f"range [{value.low}, {value.high}] outside "
                f"[{domain.floor}, {domain.ceil}]"
            )


def record(
    log: ProvenanceLog,
    value: InteractionValue,
    ts: int,
    source: Source = Source.USER,
    domain: ValueDomain | None = None,
) -> ProvenanceLog:
    """Append one interaction. Recording the current value is a no-op."""
    validate_value(log.kind, value, domain)
    if log.entries:
        last = log.entries[-1]
        if ts < last.timestamp:
            raise NonMonotonicTimestamp(
                f"timestamp {ts} precedes latest entry at {last.timestamp}"
            )
        if same_value(last.value, value):
            return log
    return replace(log, entries=log.entries + (InteractionEntry(value, ts, source),))


def current_value(log: ProvenanceLog) -> InteractionValue | None:
    return log.entries[-1].value if log.entries else None


def state_at(log: ProvenanceLog, t: int) -> InteractionValue | None:
    """Value in effect at time t (inclusive); None before the first entry."""
    timestamps = [e.timestamp for e in log.entries]
    i = bisect.bisect_right(timestamps, t)
    return log.entries[i - 1].value if i else None


def recover(
    log: ProvenanceLog,
    now: int,
    *,
    index: int | None = None,
    at: int | None = None,
    domain: ValueDomain | None = None,
) -> ProvenanceLog:
    """Re-apply a historical state as a new interaction at time `now`.

    Exactly one of `index` (entry position) or `at` (timestamp) selects the
    target. Recovering the current value is suppressed like any other no-op.
    """
    if (index is None) == (at is None):
        raise ValueError("recover needs exactly one of index= or at=")
    if index is not None:
        if not -len(log.entries) <= index < len(log.entries):
            raise NoSuchState(f"no entry at index {index}")
        value = log.entries[index].value
    else:
        value = state_at(log, at)  # type: ignore[arg-type]
        if value is None:
            raise NoSuchState(f"no state at or before t={at}")
    return record(log, value, now, source=Source.RECOVERY, domain=domain)


def set_provenance(
    log: ProvenanceLog,
    entries: list[InteractionEntry] | tuple[InteractionEntry, ...],
    revalidate: bool = False,
) -> ProvenanceLog:
    """Replace the log's history wholesale (injection / restoration).

    The revalidate flag is an instruction, not state: the returned log
    always carries revalidate=False. Callers that need to react to it
    (recompute views, emit a change) do so at the controller layer.
    """
    entries = tuple(entries)
    expected = _VALUE_TYPE_BY_KIND[log.kind]
    for i, e in enumerate(entries):
        if not isinstance(e.value, expected):
            raise KindMismatch(
                f"entry {i}: {log.kind.value} expects {expected.__name__}, "
                f"got {type(e.value).__name__}"
            )
        if i and e.timestamp < entries[i - 1].timestamp:
            raise UnsortedEntries(
                f"entry {i} at t={e.timestamp} precedes entry {i - 1} "
                f"at t={entries[i - 1].timestamp}"
            )
    del revalidate  # consumed by the caller; cleared here by construction
    return replace(log, entries=entries, revalidate=False)


def truncate_last(log: ProvenanceLog, n: int) -> ProvenanceLog:
    """Keep only the n most recent entries."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if len(log.entries) <= n:
        return log
    return replace(log, entries=log.entries[-n:])
