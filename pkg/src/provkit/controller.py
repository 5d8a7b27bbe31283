"""Controller layer: logging policy and change notification.

A controller owns one widget's log and applies its logging mode:
"interaction" records every value-changing event as it happens; "time"
stages the latest value and records it when the host's clock ticks past
the period. The host supplies all timestamps; the engine never reads
wall time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Literal

from .model import (
    InteractionEntry,
    InteractionValue,
    ProvenanceLog,
    Source,
    ValueDomain,
    WidgetKind,
    current_value,
    record,
    recover,
    same_value,
    set_provenance,
)

Mode = Literal["interaction", "time"]


@dataclass
class ControllerConfig:
    mode: Mode = "interaction"
    period_ms: int = 1000
    freeze: bool = False
    visualize: bool = True
    label: str | None = None

    def __post_init__(self) -> None:
        if self.period_ms < 1:
            raise ValueError(f"period_ms must be >= 1, got {self.period_ms}")


@dataclass(frozen=True)
class PendingValue:
    """Latest unrecorded value while in time mode."""

    value: InteractionValue
    staged_at: int


@dataclass(frozen=True)
class ProvenanceChange:
    """Notification payload: widget id plus a full log snapshot."""

    widget_id: str
    log: ProvenanceLog

    @property
    def snapshot(self) -> dict[str, Any]:
        """The log in the session-io wire schema."""
        from .session import log_to_json

        return log_to_json(self.log)


@dataclass
class WidgetController:
    widget_id: str
    kind: WidgetKind
    domain: ValueDomain
    config: ControllerConfig = field(default_factory=ControllerConfig)
    log: ProvenanceLog = field(init=False)

    _pending: PendingValue | None = field(default=None, init=False)
    _last_flush: int | None = field(default=None, init=False)

    def __post_init__(self) -> None:
        self.log = ProvenanceLog(self.kind)

    def _emit(self, before: ProvenanceLog) -> ProvenanceChange | None:
        if self.log is before:
            return None
        return ProvenanceChange(self.widget_id, self.log)

    def handle_event(
        self, value: InteractionValue, ts: int
    ) -> ProvenanceChange | None:
        """Deliver one value-changing widget event at host time ts."""
        if self.config.freeze:
            return None
        if self.config.mode == "time":
            self._pending = PendingValue(value, ts)
            return None
        before = self.log
        self.log = record(self.log, value, ts, domain=self.domain)
        return self._emit(before)

    def tick(self, now: int) -> ProvenanceChange | None:
        """Advance the host clock; flushes the staged value in time mode."""
        if self.config.mode != "time" or self._pending is None:
            return None
        if self._last_flush is not None and now - self._last_flush < self.config.period_ms:
            return None
        pending, self._pending = self._pending, None
        self._last_flush = now
        if current_value(self.log) is not None and same_value(
            current_value(self.log), pending.value
        ):
            return None
        before = self.log
        self.log = record(self.log, pending.value, now, domain=self.domain)
        return self._emit(before)

    def set_freeze(self, frozen: bool) -> None:
        """Freezing also drops any staged time-mode value."""
        self.config.freeze = frozen
        if frozen:
            self._pending = None

    def set_mode(
        self, mode: Mode, period_ms: int | None = None
    ) -> ProvenanceChange | None:
        """Switch logging policy; time->interaction flushes the staged value."""
        emitted = None
        if mode == "interaction" and self._pending is not None:
            pending, self._pending = self._pending, None
            before = self.log
            self.log = record(
                self.log, pending.value, pending.staged_at, domain=self.domain
            )
            emitted = self._emit(before)
        self.config.mode = mode
        if period_ms is not None:
            if period_ms < 1:
                raise ValueError(f"period_ms must be >= 1, got {period_ms}")
            self.config.period_ms = period_ms
        return emitted

    def set_visualize(self, on: bool) -> None:
        self.config.visualize = on

    def set_label(self, label: str | None) -> None:
        self.config.label = label

    def recover(
        self, now: int, *, index: int | None = None, at: int | None = None
    ) -> ProvenanceChange | None:
        """Restore a historical state as a new interaction (append-only)."""
        if self.config.freeze:
            return None
        before = self.log
        self.log = recover(self.log, now, index=index, at=at, domain=self.domain)
        return self._emit(before)

    def set_provenance(
        self,
        entries: list[InteractionEntry] | tuple[InteractionEntry, ...],
        revalidate: bool = False,
    ) -> ProvenanceChange | None:
        """Replace the history wholesale (works even when frozen).

        A true revalidate flag forces a change notification so attached
        views recompute from the injected log.
        """
        before = self.log
        self.log = set_provenance(self.log, entries, revalidate)
        if revalidate:
            return ProvenanceChange(self.widget_id, self.log)
        return self._emit(before)

    @property
    def value(self) -> InteractionValue | None:
        return current_value(self.log)
