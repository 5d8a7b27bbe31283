/**
 * Text input with provenance. Aggregate view: a list of previously entered
 * values, each with a frequency bar. Temporal view: a vertical timeline of
 * the entered strings. Clicking either re-applies that state.
 */
import { ProvenanceWidget } from "../base.js";
import { recencyColor } from "../palette.js";
import { formatTooltip, tooltipFor } from "../tooltip.js";

export class ProvenanceInputtext extends ProvenanceWidget {
  protected renderControl(host: HTMLElement): void {
    host.replaceChildren();
    const input = document.createElement("input");
    input.type = "text";
    input.disabled = this.frozen;
    const v = this.displayValue;
    if (typeof v === "string") input.value = v;
    input.addEventListener("change", () => this.onUserInput(input.value));
    host.append(input);
  }

  protected renderAggregate(host: HTMLElement): void {
    const block = this.analysis?.aggregate;
    if (!block || !block.bins.length) return;
    const max = Math.max(...block.bins.map((b) => b.frequency));
    const list = document.createElement("ul");
    list.className = "history-list";
    for (const bin of block.bins) {
      const item = document.createElement("li");
      item.dataset.key = String(bin.key);
      const text = document.createElement("span");
      text.textContent = String(bin.key);
      const bar = document.createElement("div");
      bar.className = "freq-bar";
      bar.dataset.frequency = String(bin.frequency);
      bar.style.width = `${(100 * bin.frequency) / max}%`;
      bar.style.background = recencyColor(bin.rank);
      bar.title = formatTooltip(tooltipFor(bin, this.label));
      item.append(text, bar);
      item.addEventListener("click", () => void this.recoverAt(bin.last_ts));
      list.append(item);
    }
    host.append(list);
  }

  protected renderTemporal(host: HTMLElement): void {
    const block = this.analysis?.temporal;
    if (!block || !("items" in block)) return;
    const timeline = document.createElement("ol");
    timeline.className = "timeline";
    for (const [ts, text] of block.items) {
      const item = document.createElement("li");
      item.dataset.timestamp = String(ts);
      item.textContent = `${ts}: ${text}`;
      item.addEventListener("click", () => void this.recoverAt(ts));
      timeline.append(item);
    }
    host.append(timeline);
  }
}
