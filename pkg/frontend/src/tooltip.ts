/**
 * Tooltip contents for overlay marks. Fields come verbatim from the
 * analysis document; the label comes from the widget's data-label.
 */
import type { AggregateBin } from "./schema.js";

export interface TooltipModel {
  label: string | null;
  value: string;
  timestamp: number;
  frequency: number;
  rank: number;
}

export function tooltipFor(
  bin: AggregateBin,
  label: string | null,
): TooltipModel {
  return {
    label,
    value: String(bin.key),
    timestamp: bin.last_ts,
    frequency: bin.frequency,
    rank: bin.rank,
  };
}

export function formatTooltip(t: TooltipModel): string {
  const head = t.label === null ? t.value : `${t.label}: ${t.value}`;
  return `${head}\nlast: ${t.timestamp}\nfrequency: ${t.frequency}\nrecency rank: ${t.rank}`;
}
