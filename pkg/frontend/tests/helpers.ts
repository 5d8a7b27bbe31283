/**
 * Test utilities: fixture loading and a canned engine.
 *
 * Every fixture under ./fixtures is real engine output (see generate.py
 * there), so the widgets are exercised against the exact bytes the backend
 * produces rather than hand-written approximations.
 */
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { type EngineClient, type Snapshot, snapshotFrom } from "../src/engine.js";
import { defineWidgets } from "../src/index.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function loadSnapshot(stem: string): Snapshot {
  return snapshotFrom(
    readFileSync(join(FIXTURES, `${stem}.provjson`), "utf8"),
    readFileSync(join(FIXTURES, `${stem}-analysis.json`), "utf8"),
  );
}

/** Serves a precomputed recovery snapshot and records how it was called. */
export class FixtureEngine implements EngineClient {
  calls: { widgetId: string; at: number }[] = [];

  constructor(private readonly result: Snapshot) {}

  recover(widgetId: string, at: number): Promise<Snapshot> {
    this.calls.push({ widgetId, at });
    return Promise.resolve(this.result);
  }
}

export function mount<T extends HTMLElement>(tag: string): T {
  defineWidgets();
  const el = document.createElement(tag) as T;
  document.body.append(el);
  return el;
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
