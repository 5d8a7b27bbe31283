/**
 * View-mode state machine shared by every widget.
 *
 *   disabled --first interaction--> aggregate
 *   aggregate <--footprint button--> temporal
 *
 * The footprint button is inert while disabled; a widget is disabled
 * exactly when its log is empty.
 */

export type ViewMode = "disabled" | "aggregate" | "temporal";

export function initialMode(hasHistory: boolean): ViewMode {
  return hasHistory ? "aggregate" : "disabled";
}

export function afterInteraction(mode: ViewMode): ViewMode {
  return mode === "disabled" ? "aggregate" : mode;
}

export function toggleFootprint(mode: ViewMode): ViewMode {
  if (mode === "aggregate") return "temporal";
  if (mode === "temporal") return "aggregate";
  return mode;
}
