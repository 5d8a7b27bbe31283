/**
 * Types and parsers for the serialized session format (schema version "1")
 * and for the analysis export (aggregate bins + temporal traces).
 *
 * The widgets never compute provenance themselves: everything they render
 * comes out of these two documents, produced by the engine.
 */
import { z } from "zod";

export const WIDGET_KINDS = [
  "single-slider",
  "range-slider",
  "dropdown",
  "multiselect",
  "radiobutton",
  "checkbox",
  "inputtext",
] as const;

export type WidgetKind = (typeof WIDGET_KINDS)[number];

const kindSchema = z.enum(WIDGET_KINDS);

const scalarValue = z.number();
const rangeValue = z.tuple([z.number(), z.number()]);
const optionsValue = z.array(z.string());
const textValue = z.string();

export type EntryValue = number | [number, number] | string[] | string;

const entrySchema = z.object({
  value: z.union([rangeValue, optionsValue, scalarValue, textValue]),
  timestamp: z.number().int().nonnegative(),
  source: z.enum(["user", "recovery", "external"]),
});

export type LogEntry = z.infer<typeof entrySchema>;

const logSchema = z.object({
  entries: z.array(entrySchema),
  revalidate: z.boolean(),
});

const sliderDomain = z.object({
  floor: z.number(),
  ceil: z.number(),
  step: z.number().positive(),
});

const optionsDomain = z.object({
  options: z.array(z.object({ id: z.string(), label: z.string() })),
});

const textDomain = z.object({}).strict();

const domainSchema = z.union([sliderDomain, optionsDomain, textDomain]);

export type SliderDomain = z.infer<typeof sliderDomain>;
export type OptionsDomain = z.infer<typeof optionsDomain>;

const configSchema = z.object({
  mode: z.enum(["interaction", "time"]),
  period_ms: z.number().int().min(1),
  freeze: z.boolean(),
  visualize: z.boolean(),
  label: z.string().nullable(),
});

const widgetRecordSchema = z.object({
  kind: kindSchema,
  domain: domainSchema,
  config: configSchema,
  log: logSchema,
});

export type WidgetRecord = z.infer<typeof widgetRecordSchema>;

const sessionSchema = z.object({
  version: z.literal("1"),
  widgets: z.record(z.string(), widgetRecordSchema),
});

export type SessionDocument = z.infer<typeof sessionSchema>;

// --- analysis export -------------------------------------------------------

const binSchema = z.object({
  key: z.union([z.number(), z.string()]),
  frequency: z.number().int().positive(),
  last_ts: z.number().int().nonnegative(),
  rank: z.number().int().positive(),
});

export type AggregateBin = z.infer<typeof binSchema>;

const aggregateBlock = z.object({
  kind: kindSchema,
  bins: z.array(binSchema),
});

/** [start, end] pairs; a null end means the selection is still active. */
const intervalPair = z.tuple([z.number(), z.number().nullable()]);

const temporalBlock = z.union([
  z.object({ series: z.array(z.array(z.tuple([z.number(), z.number()]))) }),
  z.object({ intervals: z.record(z.string(), z.array(intervalPair)) }),
  z.object({ items: z.array(z.tuple([z.number(), z.string()])) }),
]);

export type TemporalBlock = z.infer<typeof temporalBlock>;

const analysisWidget = z.object({
  aggregate: aggregateBlock.nullable(),
  temporal: temporalBlock.nullable(),
});

export type WidgetAnalysis = z.infer<typeof analysisWidget>;

const analysisSchema = z.object({
  version: z.literal("1"),
  widgets: z.record(z.string(), analysisWidget),
});

export type AnalysisDocument = z.infer<typeof analysisSchema>;

export function parseSession(text: string): SessionDocument {
  return sessionSchema.parse(JSON.parse(text));
}

export function parseAnalysis(text: string): AnalysisDocument {
  return analysisSchema.parse(JSON.parse(text));
}

/** Last logged value, or null for an untouched widget. */
export function currentValue(record: WidgetRecord): EntryValue | null {
  const entries = record.log.entries;
  return entries.length ? entries[entries.length - 1].value : null;
}
