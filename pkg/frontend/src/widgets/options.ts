/**
 * Shared view for selection-type controls (radio, checkbox, dropdown,
 * multiselect): one row per option, an aggregate bar whose length encodes
 * frequency and color encodes recency, and temporal interval bars that
 * recover the full selection of the clicked instant.
 */
import { ProvenanceWidget } from "../base.js";
import { recencyColor } from "../palette.js";
import { type OptionsDomain } from "../schema.js";
import { formatTooltip, tooltipFor } from "../tooltip.js";

export abstract class OptionProvenanceWidget extends ProvenanceWidget {
  protected abstract readonly multiple: boolean;
  protected abstract readonly inputType: "radio" | "checkbox";

  protected get options(): { id: string; label: string }[] {
    return (this.record?.domain as OptionsDomain | undefined)?.options ?? [];
  }

  protected get selected(): Set<string> {
    const v = this.displayValue;
    return new Set(Array.isArray(v) ? (v as string[]) : []);
  }

  protected renderControl(host: HTMLElement): void {
    host.replaceChildren();
    const selected = this.selected;
    for (const opt of this.options) {
      const row = document.createElement("label");
      row.className = "option-row";
      const input = document.createElement("input");
      input.type = this.inputType;
      input.name = this.widgetId || "options";
      input.value = opt.id;
      input.checked = selected.has(opt.id);
      input.disabled = this.frozen;
      input.addEventListener("change", () => this.pick(opt.id, input.checked));
      const text = document.createElement("span");
      text.textContent = opt.label;
      row.append(input, text);
      host.append(row);
    }
  }

  private pick(id: string, on: boolean): void {
    let next: string[];
    if (this.multiple) {
      const s = this.selected;
      if (on) s.add(id);
      else s.delete(id);
      next = this.options.map((o) => o.id).filter((oid) => s.has(oid));
    } else {
      next = on ? [id] : [];
    }
    this.onUserInput(next);
  }

  protected renderAggregate(host: HTMLElement): void {
    const block = this.analysis?.aggregate;
    if (!block || !block.bins.length) return;
    const max = Math.max(...block.bins.map((b) => b.frequency));
    const byKey = new Map(block.bins.map((b) => [String(b.key), b]));
    for (const opt of this.options) {
      const bin = byKey.get(opt.id);
      if (!bin) continue;
      const bar = document.createElement("div");
      bar.className = "freq-bar";
      bar.dataset.option = opt.id;
      bar.dataset.frequency = String(bin.frequency);
      bar.style.width = `${(100 * bin.frequency) / max}%`;
      bar.style.background = recencyColor(bin.rank);
      bar.title = formatTooltip(tooltipFor(bin, this.label));
      bar.addEventListener("click", () => void this.recoverAt(bin.last_ts));
      host.append(bar);
    }
  }

  protected renderTemporal(host: HTMLElement): void {
    const block = this.analysis?.temporal;
    if (!block || !("intervals" in block)) return;
    const spans = Object.values(block.intervals).flat();
    if (!spans.length) return;
    const t0 = Math.min(...spans.map(([s]) => s));
    const horizon = Math.max(...spans.map(([s, e]) => e ?? s)) + 1;
    const width = Math.max(horizon - t0, 1);
    for (const opt of this.options) {
      const track = document.createElement("div");
      track.className = "interval-track";
      track.dataset.option = opt.id;
      for (const [start, end] of block.intervals[opt.id] ?? []) {
        const seg = document.createElement("div");
        seg.className = "interval";
        seg.dataset.start = String(start);
        seg.dataset.end = end === null ? "open" : String(end);
        seg.style.left = `${(100 * (start - t0)) / width}%`;
        seg.style.width = `${(100 * ((end ?? horizon) - start)) / width}%`;
        const shown = end === null ? "now" : String(end);
        seg.title = `${this.label ?? opt.label}: ${opt.label} [${start}, ${shown})`;
        seg.addEventListener("click", () => void this.recoverAt(start));
        track.append(seg);
      }
      host.append(track);
    }
  }
}

export class ProvenanceRadiobutton extends OptionProvenanceWidget {
  protected readonly multiple = false;
  protected readonly inputType = "radio" as const;
}

export class ProvenanceCheckbox extends OptionProvenanceWidget {
  protected readonly multiple = true;
  protected readonly inputType = "checkbox" as const;
}
