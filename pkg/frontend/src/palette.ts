/**
 * Recency color scale: a 5-step sequential orange palette indexed by dense
 * recency rank (rank 1 = most recent = darkest). Ranks past the palette
 * depth share the lightest shade.
 */

export const RECENCY_SHADES = [
  "#7f2704",
  "#d94801",
  "#fd8d3c",
  "#fdbe85",
  "#feedde",
] as const;

export function recencyColor(rank: number): string {
  const i = Math.min(Math.max(rank, 1), RECENCY_SHADES.length) - 1;
  return RECENCY_SHADES[i];
}
