/**
 * The boundary to the provenance engine.
 *
 * Widgets hold no history of their own: they render the latest snapshot and
 * ask the engine to perform mutations. A snapshot pairs the serialized
 * session with its analysis export, both produced by the engine.
 */
import {
  type AnalysisDocument,
  type SessionDocument,
  parseAnalysis,
  parseSession,
} from "./schema.js";

export interface Snapshot {
  session: SessionDocument;
  analysis: AnalysisDocument;
}

export function snapshotFrom(sessionText: string, analysisText: string): Snapshot {
  return {
    session: parseSession(sessionText),
    analysis: parseAnalysis(analysisText),
  };
}

export interface EngineClient {
  /**
   * Re-apply the state the widget held at instant `at`; resolves to the
   * snapshot after the recovery entry is appended (or unchanged under
   * no-op suppression).
   */
  recover(widgetId: string, at: number): Promise<Snapshot>;
}
