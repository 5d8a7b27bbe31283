/**
 * The widget-level state machine, driven end to end against engine-produced
 * fixture sessions: disabled until the first interaction, footprint toggling
 * between the aggregate and temporal overlays, and visualize=false removing
 * every overlay while the base control keeps working.
 */
import { afterEach, describe, expect, it } from "vitest";

import type { ProvenanceRadiobutton } from "../src/widgets/options.js";
import { loadSnapshot, mount } from "./helpers.js";

afterEach(() => {
  document.body.replaceChildren();
});

function mountRadio(stem: string): ProvenanceRadiobutton {
  const el = mount<ProvenanceRadiobutton>("provenance-radiobutton");
  el.loadSnapshot(loadSnapshot(stem), "pref");
  return el;
}

describe("disabled state", () => {
  it("an empty log renders no overlay and an inert footprint", () => {
    const el = mountRadio("radio-empty");
    expect(el.viewMode).toBe("disabled");
    const footprint = el.querySelector<HTMLButtonElement>(".footprint")!;
    expect(footprint.disabled).toBe(true);
    expect(el.querySelector<HTMLElement>(".overlay")!.hidden).toBe(true);

    footprint.click();
    expect(el.viewMode).toBe("disabled");
  });

  it("the first interaction switches to the aggregate view", () => {
    const el = mountRadio("radio-empty");
    const input = el.querySelector<HTMLInputElement>('input[value="B"]')!;
    input.click();
    expect(el.viewMode).toBe("aggregate");
    expect(el.querySelector<HTMLButtonElement>(".footprint")!.disabled).toBe(
      false,
    );
  });

  it("the interaction emits a provenanceChange with the new value", () => {
    const el = mountRadio("radio-empty");
    const seen: unknown[] = [];
    el.addEventListener("provenanceChange", (e) =>
      seen.push((e as CustomEvent).detail.value),
    );
    el.querySelector<HTMLInputElement>('input[value="A"]')!.click();
    expect(seen).toEqual([["A"]]);
  });
});

describe("footprint toggle", () => {
  it("cycles aggregate -> temporal -> aggregate", () => {
    const el = mountRadio("radio-session");
    expect(el.viewMode).toBe("aggregate");
    expect(el.querySelectorAll(".freq-bar")).toHaveLength(2);

    const footprint = el.querySelector<HTMLButtonElement>(".footprint")!;
    footprint.click();
    expect(el.viewMode).toBe("temporal");
    expect(el.querySelectorAll(".freq-bar")).toHaveLength(0);
    expect(el.querySelectorAll(".interval").length).toBeGreaterThan(0);

    footprint.click();
    expect(el.viewMode).toBe("aggregate");
    expect(el.querySelectorAll(".freq-bar")).toHaveLength(2);
  });

  it("renders the aggregate bars straight from the analysis export", () => {
    const el = mountRadio("radio-session");
    const bars = el.querySelectorAll<HTMLElement>(".freq-bar");
    const byOption = new Map(
      Array.from(bars, (b) => [b.dataset.option, b.dataset.frequency]),
    );
    expect(byOption.get("A")).toBe("2");
    expect(byOption.get("B")).toBe("1");
  });

  it("renders one interval bar per selection span", () => {
    const el = mountRadio("radio-session");
    el.querySelector<HTMLButtonElement>(".footprint")!.click();
    const spans = Array.from(
      el.querySelectorAll<HTMLElement>(".interval"),
      (s) => [
        s.closest<HTMLElement>(".interval-track")!.dataset.option,
        s.dataset.start,
        s.dataset.end,
      ],
    );
    expect(spans).toEqual([
      ["A", "10", "20"],
      ["A", "30", "open"],
      ["B", "20", "30"],
    ]);
  });
});

describe("visualize flag", () => {
  it("visualize=false hides overlays but keeps the control operable", () => {
    const el = mountRadio("radio-session");
    el.setAttribute("visualize", "false");
    expect(el.querySelector<HTMLElement>(".overlay")!.hidden).toBe(true);
    expect(el.querySelectorAll(".freq-bar")).toHaveLength(0);

    const input = el.querySelector<HTMLInputElement>('input[value="B"]')!;
    expect(input.disabled).toBe(false);
    const seen: unknown[] = [];
    el.addEventListener("provenanceChange", (e) =>
      seen.push((e as CustomEvent).detail.value),
    );
    input.click();
    expect(seen).toEqual([["B"]]);

    el.setAttribute("visualize", "true");
    expect(el.querySelector<HTMLElement>(".overlay")!.hidden).toBe(false);
  });

  it("freeze blocks interactions entirely", () => {
    const el = mountRadio("radio-empty");
    el.setAttribute("freeze", "true");
    const seen: unknown[] = [];
    el.addEventListener("provenanceChange", (e) => seen.push(e));
    const input = el.querySelector<HTMLInputElement>('input[value="A"]')!;
    expect(input.disabled).toBe(true);
    expect(seen).toEqual([]);
    expect(el.viewMode).toBe("disabled");
  });
});

describe("snapshot determinism", () => {
  it("re-rendering from the same snapshot is idempotent", () => {
    const el = mountRadio("radio-session");
    const first = el.innerHTML;
    el.loadSnapshot(loadSnapshot("radio-session"), "pref");
    expect(el.innerHTML).toBe(first);
  });
});
