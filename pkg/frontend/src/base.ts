/**
 * Shared behavior for every provenance-enhanced control.
 *
 * The element is a pure view over two engine-produced documents (session
 * record + analysis block). It owns only the view mode; history and
 * aggregation always come from the engine.
 *
 * Attributes: provenance (the widget's session record as JSON), mode,
 * freeze, visualize, data-label. Event: provenanceChange.
 */
import type { EngineClient, Snapshot } from "./engine.js";
import {
  type EntryValue,
  type WidgetAnalysis,
  type WidgetRecord,
  currentValue,
} from "./schema.js";
import {
  type ViewMode,
  afterInteraction,
  initialMode,
  toggleFootprint,
} from "./viewmode.js";

export abstract class ProvenanceWidget extends HTMLElement {
  static observedAttributes = [
    "provenance",
    "mode",
    "freeze",
    "visualize",
    "data-label",
  ];

  widgetId = "";
  record: WidgetRecord | null = null;
  analysis: WidgetAnalysis | null = null;
  engine: EngineClient | null = null;
  viewMode: ViewMode = "disabled";

  protected control!: HTMLElement;
  protected overlay!: HTMLElement;
  protected footprint!: HTMLButtonElement;
  private built = false;

  connectedCallback(): void {
    if (!this.built) {
      this.built = true;
      this.control = document.createElement("div");
      this.control.className = "control";
      this.overlay = document.createElement("div");
      this.overlay.className = "overlay";
      this.footprint = document.createElement("button");
      this.footprint.className = "footprint";
      this.footprint.type = "button";
      this.footprint.title = "Toggle provenance view";
      this.footprint.addEventListener("click", () => {
        this.viewMode = toggleFootprint(this.viewMode);
        this.render();
      });
      this.append(this.control, this.footprint, this.overlay);
    }
    this.readProvenanceAttribute();
    this.render();
  }

  attributeChangedCallback(name: string): void {
    if (!this.built) return;
    if (name === "provenance") this.readProvenanceAttribute();
    this.render();
  }

  private readProvenanceAttribute(): void {
    const raw = this.getAttribute("provenance");
    if (raw) this.setRecord(JSON.parse(raw) as WidgetRecord);
  }

  /** Replace the rendered record, resetting the view mode from the log. */
  setRecord(record: WidgetRecord, analysis: WidgetAnalysis | null = null): void {
    this.record = record;
    this.liveValue = null;
    if (analysis !== null) this.analysis = analysis;
    this.viewMode = initialMode(record.log.entries.length > 0);
    this.render();
  }

  loadSnapshot(snapshot: Snapshot, widgetId: string): void {
    this.widgetId = widgetId;
    this.setRecord(
      snapshot.session.widgets[widgetId],
      snapshot.analysis.widgets[widgetId],
    );
  }

  get frozen(): boolean {
    if (this.hasAttribute("freeze")) return this.getAttribute("freeze") !== "false";
    return this.record?.config.freeze ?? false;
  }

  get visualize(): boolean {
    if (this.hasAttribute("visualize")) {
      return this.getAttribute("visualize") !== "false";
    }
    return this.record?.config.visualize ?? true;
  }

  get label(): string | null {
    return this.getAttribute("data-label") ?? this.record?.config.label ?? null;
  }

  get value(): EntryValue | null {
    return this.record ? currentValue(this.record) : null;
  }

  /** In-flight user value, not yet confirmed by an engine snapshot. */
  protected liveValue: EntryValue | null = null;

  /** What the control should show: the unconfirmed input if any. */
  get displayValue(): EntryValue | null {
    return this.liveValue ?? this.value;
  }

  /** Called by subclasses whenever the user changes the control's value. */
  protected onUserInput(value: EntryValue): void {
    if (this.frozen) return;
    this.liveValue = value;
    this.viewMode = afterInteraction(this.viewMode);
    this.emitChange(value);
    this.render();
  }

  protected emitChange(value: EntryValue): void {
    this.dispatchEvent(
      new CustomEvent("provenanceChange", {
        detail: { widgetId: this.widgetId, value, timestamp: Date.now() },
        bubbles: true,
      }),
    );
  }

  /** Ask the engine to re-apply the state held at `at`, then re-render. */
  protected async recoverAt(at: number): Promise<void> {
    if (!this.engine || this.frozen || !this.widgetId) return;
    let snapshot: Snapshot;
    try {
      snapshot = await this.engine.recover(this.widgetId, at);
    } catch {
      return; // stale target: the log changed underneath; keep the view
    }
    const mode = this.viewMode;
    this.loadSnapshot(snapshot, this.widgetId);
    this.viewMode = mode === "disabled" ? this.viewMode : mode;
    const v = this.value;
    if (v !== null) this.emitChange(v);
    this.render();
  }

  protected render(): void {
    if (!this.built || !this.record) return;
    this.footprint.disabled = this.viewMode === "disabled";
    this.footprint.dataset.mode = this.viewMode;
    this.renderControl(this.control);
    this.overlay.replaceChildren();
    this.overlay.hidden = !this.visualize || this.viewMode === "disabled";
    if (this.overlay.hidden) return;
    if (this.viewMode === "aggregate" && this.analysis?.aggregate) {
      this.renderAggregate(this.overlay);
    } else if (this.viewMode === "temporal" && this.analysis?.temporal) {
      this.renderTemporal(this.overlay);
    }
  }

  protected abstract renderControl(host: HTMLElement): void;
  protected abstract renderAggregate(host: HTMLElement): void;
  protected abstract renderTemporal(host: HTMLElement): void;
}
