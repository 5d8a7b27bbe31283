"""Acceptance suite: one test per exit criterion, one PASS line each.

Run with `pytest tests/test_acceptance.py -s` to see the per-criterion
lines on the terminal.
"""

import json
import random
import time

import pytest
from click.testing import CliRunner

from provkit import (
    ControllerConfig,
    InteractionEntry,
    ProvenanceLog,
    Range,
    Scalar,
    SchemaViolation,
    SessionDocument,
    SliderDomain,
    Source,
    WidgetController,
    WidgetKind,
    WidgetRecord,
    aggregate,
    current_value,
    deserialize,
    export_aggregates,
    record,
    recover,
    same_value,
    serialize,
    set_provenance,
    state_at,
    temporal_trace,
    truncate_last,
)
from provkit.cli import main as cli_main
from provkit.model import OPTION_KINDS

from .oracles import (
    brute_force_counts,
    corrupt_document,
    oracle_ranks,
    random_document,
    random_log,
    random_session_pair,
    random_value,
)


def ok(line: str) -> None:
    print(f"\nPASS {line}")


def test_frequency_recency_oracle_suite():
    """1,000 randomized logs per kind match the brute-force counter exactly,
    within the 10 s budget (CPU time, so a loaded host cannot skew the run)."""
    start = time.process_time()
    for kind in WidgetKind:
        rng = random.Random(f"acceptance-oracle-{kind.value}")
        for _ in range(1000):
            log, domain = random_log(kind, rng, max_entries=200, max_steps=500)
            summary = aggregate(log, domain)
            freq, last = brute_force_counts(log, domain)
            assert {b.key: b.frequency for b in summary.bins} == freq
            assert {b.key: b.last_ts for b in summary.bins} == last
            assert summary.recency_rank == oracle_ranks(last)
    elapsed = time.process_time() - start
    assert elapsed < 10, f"oracle suite took {elapsed:.1f}s"
    ok(f"frequency/recency oracle suite: 7000 logs exact in {elapsed:.1f}s")


def test_scented_widgets_fixture():
    """Injected usage logs [100,160]x2 + [160,200]: coverage 2/1/3 at steps
    120/180/160; a frozen widget records nothing afterwards."""
    entries = [
        InteractionEntry(Range(100, 160), 1, Source.EXTERNAL),
        InteractionEntry(Range(100, 160), 2, Source.EXTERNAL),
        InteractionEntry(Range(160, 200), 3, Source.EXTERNAL),
    ]
    domain = SliderDomain(100, 200, 20)
    controller = WidgetController(
        "usage", WidgetKind.RANGE_SLIDER, domain, ControllerConfig(freeze=True)
    )
    controller.set_provenance(entries, revalidate=True)
    summary = aggregate(controller.log, domain)
    assert summary.frequency(120) == 2
    assert summary.frequency(180) == 1
    assert summary.frequency(160) == 3
    for t in range(10, 100, 10):
        controller.handle_event(Range(100, 100 + t), t)
        controller.tick(t)
    assert len(controller.log) == 3
    ok("scented-widgets fixture: coverage 2/1/3, frozen injection inert")


def test_phosphor_truncation_property():
    """10,000 random event sequences with truncate_last(2) per interaction:
    the log always holds the <=2 most recent entries."""
    rng = random.Random("acceptance-phosphor")
    domain = SliderDomain(0, 100, 1)
    for _ in range(10_000):
        log = ProvenanceLog(WidgetKind.SINGLE_SLIDER)
        recorded = []
        ts = 0
        for _ in range(rng.randint(0, 12)):
            ts += rng.randint(0, 5)
            before = len(log)
            log = record(log, Scalar(rng.randint(0, 100)), ts, domain=domain)
            if len(log) > before:
                recorded.append(log.entries[-1])
            log = truncate_last(log, 2)
            assert len(log) <= 2
            assert log.entries == tuple(recorded[-2:])
        if log.entries:
            stamps = {e.timestamp for e in log.entries}
            assert len(stamps) <= 2
    ok("phosphor fixture: 10,000 sequences keep only the 2 most recent entries")


def test_dynamic_query_fixture():
    """freeze=true + visualize=false records nothing and aggregates nothing."""
    rng = random.Random("acceptance-dq")
    domain = SliderDomain(0, 100, 1)
    controller = WidgetController(
        "rooms",
        WidgetKind.SINGLE_SLIDER,
        domain,
        ControllerConfig(freeze=True, visualize=False),
    )
    for t in range(0, 5000, 37):
        controller.handle_event(Scalar(rng.randint(0, 100)), t)
        controller.tick(t)
    assert len(controller.log) == 0
    doc = SessionDocument(
        widgets={
            "rooms": WidgetRecord(
                WidgetKind.SINGLE_SLIDER,
                domain,
                controller.config,
                controller.log,
            )
        }
    )
    exported = json.loads(export_aggregates(doc))
    assert exported["widgets"]["rooms"] == {"aggregate": None, "temporal": None}
    ok("dynamic-query fixture: inert widget records and aggregates nothing")


def test_replay_interval_duality():
    """Interval membership equals state_at membership at 1,000 sampled
    timestamps per random option-widget log."""
    for kind in sorted(OPTION_KINDS, key=lambda k: k.value):
        rng = random.Random(f"acceptance-duality-{kind.value}")
        for _ in range(10):
            log, domain = random_log(kind, rng, max_entries=60)
            trace = temporal_trace(log)
            intervals = dict(trace.per_option)
            horizon = log.entries[-1].timestamp + 100
            for _ in range(1000):
                t = rng.randint(0, horizon)
                state = state_at(log, t)
                selected = state.as_set() if state is not None else frozenset()
                for oid in domain.ids:
                    member = any(
                        iv.start <= t and (iv.end is None or t < iv.end)
                        for iv in intervals.get(oid, ())
                    )
                    assert member == (oid in selected), (kind, oid, t)
    ok("replay duality: interval membership == state_at membership, exact")


def _simulate_time_mode():
    rng = random.Random("acceptance-timemode")
    controller = WidgetController(
        "s",
        WidgetKind.SINGLE_SLIDER,
        SliderDomain(0, 100, 1),
        ControllerConfig(mode="time", period_ms=1000),
    )
    for t in range(100, 60_001, 100):
        controller.handle_event(Scalar(rng.randint(0, 100)), t)
        if t % 1000 == 0:
            controller.tick(t)
    return controller.log


def test_time_mode_bound():
    """60 s simulated session, events every 100 ms, period 1000 ms: between
    1 and 61 entries, consecutive values distinct, fully deterministic."""
    log = _simulate_time_mode()
    assert 1 <= len(log) <= 61
    for a, b in zip(log.entries, log.entries[1:]):
        assert a.value != b.value
    assert _simulate_time_mode() == log
    ok(f"time-mode bound: {len(log)} entries in [1, 61], distinct, deterministic")


def test_serialization_round_trip_and_mutation_corpus():
    """1,000 fuzzed valid documents round-trip structurally; every
    single-field corruption is rejected with a located diagnostic."""
    rng = random.Random("acceptance-serialization")
    for _ in range(1000):
        doc = random_document(rng)
        text = serialize(doc)
        again = deserialize(text)
        assert again == doc
        assert serialize(again) == text
    rejected = 0
    while rejected < 300:
        doc = random_document(rng)
        if not doc.widgets:
            continue
        raw = json.loads(serialize(doc))
        mutated, _name, wid = corrupt_document(raw, rng)
        with pytest.raises(SchemaViolation) as exc:
            deserialize(json.dumps(mutated))
        if wid is not None:
            assert wid in str(exc.value)
        rejected += 1
    ok("serialization: 1,000 round-trips, 300/300 corruptions rejected with location")


def test_recovery_criterion():
    """recover(target) then current_value equals state_at(target); length
    grows by exactly 1, or 0 under no-op suppression."""
    for kind in WidgetKind:
        rng = random.Random(f"acceptance-recover-{kind.value}")
        for _ in range(50):
            log, domain = random_log(kind, rng, max_entries=40)
            now = log.entries[-1].timestamp + 1
            if rng.random() < 0.5:
                idx = rng.randrange(len(log.entries))
                target_value = log.entries[idx].value
                out = recover(log, now, index=idx, domain=domain)
            else:
                t = rng.randint(
                    log.entries[0].timestamp, log.entries[-1].timestamp
                )
                target_value = state_at(log, t)
                out = recover(log, now, at=t, domain=domain)
            assert same_value(current_value(out), target_value)
            grew = len(out) - len(log)
            if same_value(target_value, current_value(log)):
                assert grew == 0
            else:
                assert grew == 1
                assert out.entries[-1].source is Source.RECOVERY
    ok("recovery: restored value equals state_at(target); growth in {0, 1}")


def test_cli_merge_criterion(tmp_path):
    """Merged per-bin frequencies equal the sum of the inputs' on 100
    random session pairs; merging with the empty session is the identity."""
    runner = CliRunner()
    rng = random.Random("acceptance-merge")
    for i in range(100):
        a, b = random_session_pair(rng)
        fa = tmp_path / f"a{i}.provjson"
        fb = tmp_path / f"b{i}.provjson"
        fa.write_text(serialize(a))
        fb.write_text(serialize(b))
        res = runner.invoke(cli_main, ["merge", str(fa), str(fb)])
        assert res.exit_code == 0, res.output
        merged = deserialize(res.output.strip())
        for wid, rec in merged.widgets.items():
            expected: dict = {}
            for doc in (a, b):
                if wid not in doc.widgets or doc.widgets[wid].log.empty:
                    continue
                part = aggregate(doc.widgets[wid].log, doc.widgets[wid].domain)
                for bn in part.bins:
                    expected[bn.key] = expected.get(bn.key, 0) + bn.frequency
            got = (
                {}
                if rec.log.empty
                else {
                    bn.key: bn.frequency
                    for bn in aggregate(rec.log, rec.domain).bins
                }
            )
            assert got == expected
    a, _ = random_session_pair(rng)
    fa = tmp_path / "ident.provjson"
    fe = tmp_path / "empty.provjson"
    fa.write_text(serialize(a))
    fe.write_text(serialize(SessionDocument()))
    res = runner.invoke(cli_main, ["merge", str(fa), str(fe)])
    assert res.output.strip() == serialize(a)
    ok("cli merge: 100 pairs sum exactly; empty session is the identity")
