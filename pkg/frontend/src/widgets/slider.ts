/**
 * Slider with provenance overlays. Handles both the single-value and the
 * two-handle range form, chosen by the record's kind.
 *
 * Aggregate view: one bar per touched step above the rail, height encoding
 * frequency and color encoding recency. Temporal view: a popover line chart
 * of value against time (two polylines for ranges). Clicking a bar or a
 * point re-applies the matching historical state.
 */
import { ProvenanceWidget } from "../base.js";
import { recencyColor } from "../palette.js";
import { type SliderDomain } from "../schema.js";
import { formatTooltip, tooltipFor } from "../tooltip.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export class ProvenanceSlider extends ProvenanceWidget {
  private get domain(): SliderDomain | null {
    const d = this.record?.domain;
    return d && "floor" in d ? (d as SliderDomain) : null;
  }

  private get isRange(): boolean {
    return this.record?.kind === "range-slider";
  }

  protected renderControl(host: HTMLElement): void {
    host.replaceChildren();
    const domain = this.domain;
    if (!domain) return;
    const v = this.displayValue;
    const handles = this.isRange ? 2 : 1;
    const inputs: HTMLInputElement[] = [];
    for (let i = 0; i < handles; i++) {
      const input = document.createElement("input");
      input.type = "range";
      input.min = String(domain.floor);
      input.max = String(domain.ceil);
      input.step = String(domain.step);
      input.disabled = this.frozen;
      if (this.isRange && Array.isArray(v)) {
        input.value = String((v as [number, number])[i]);
      } else if (!this.isRange && typeof v === "number") {
        input.value = String(v);
      }
      // commit at the end of the drag, not on every intermediate value
      input.addEventListener("change", () => {
        if (!this.isRange) {
          this.onUserInput(Number(inputs[0].value));
          return;
        }
        const a = Number(inputs[0].value);
        const b = Number(inputs[1].value);
        this.onUserInput([Math.min(a, b), Math.max(a, b)]);
      });
      inputs.push(input);
      host.append(input);
    }
  }

  protected renderAggregate(host: HTMLElement): void {
    const block = this.analysis?.aggregate;
    const domain = this.domain;
    if (!block || !block.bins.length || !domain) return;
    const max = Math.max(...block.bins.map((b) => b.frequency));
    const span = domain.ceil - domain.floor;
    for (const bin of block.bins) {
      const bar = document.createElement("div");
      bar.className = "freq-bar";
      bar.dataset.key = String(bin.key);
      bar.dataset.frequency = String(bin.frequency);
      bar.style.left = `${(100 * (Number(bin.key) - domain.floor)) / span}%`;
      bar.style.height = `${(100 * bin.frequency) / max}%`;
      bar.style.background = recencyColor(bin.rank);
      bar.title = formatTooltip(tooltipFor(bin, this.label));
      bar.addEventListener("click", () => void this.recoverAt(bin.last_ts));
      host.append(bar);
    }
  }

  protected renderTemporal(host: HTMLElement): void {
    const block = this.analysis?.temporal;
    const domain = this.domain;
    if (!block || !("series" in block) || !domain) return;
    const stamps = block.series.flat().map(([ts]) => ts);
    if (!stamps.length) return;
    const t0 = Math.min(...stamps);
    const dt = Math.max(Math.max(...stamps) - t0, 1);
    const span = domain.ceil - domain.floor;
    const popover = document.createElement("div");
    popover.className = "temporal-popover";
    const svg = document.createElementNS(SVG_NS, "svg");
    svg.setAttribute("viewBox", "0 0 100 100");
    for (const series of block.series) {
      const line = document.createElementNS(SVG_NS, "polyline");
      line.setAttribute(
        "points",
        series
          .map(
            ([ts, v]) =>
              `${(100 * (v - domain.floor)) / span},${(100 * (ts - t0)) / dt}`,
          )
          .join(" "),
      );
      svg.append(line);
      for (const [ts, v] of series) {
        const dot = document.createElementNS(SVG_NS, "circle");
        dot.setAttribute("cx", String((100 * (v - domain.floor)) / span));
        dot.setAttribute("cy", String((100 * (ts - t0)) / dt));
        dot.setAttribute("r", "2");
        dot.dataset.timestamp = String(ts);
        dot.addEventListener("click", () => void this.recoverAt(ts));
        svg.append(dot);
      }
    }
    popover.append(svg);
    host.append(popover);
  }
}
