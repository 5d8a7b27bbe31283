/**
 * Registers the provenance-enhanced form controls as custom elements.
 */
import {
  ProvenanceCheckbox,
  ProvenanceRadiobutton,
} from "./widgets/options.js";
import { ProvenanceDropdown, ProvenanceMultiselect } from "./widgets/select.js";
import { ProvenanceInputtext } from "./widgets/inputtext.js";
import { ProvenanceSlider } from "./widgets/slider.js";

export { ProvenanceWidget } from "./base.js";
export * from "./engine.js";
export * from "./palette.js";
export * from "./schema.js";
export * from "./tooltip.js";
export * from "./viewmode.js";
export {
  ProvenanceCheckbox,
  ProvenanceDropdown,
  ProvenanceInputtext,
  ProvenanceMultiselect,
  ProvenanceRadiobutton,
  ProvenanceSlider,
};

const registry: [string, CustomElementConstructor][] = [
  ["provenance-slider", ProvenanceSlider],
  ["provenance-dropdown", ProvenanceDropdown],
  ["provenance-multiselect", ProvenanceMultiselect],
  ["provenance-radiobutton", ProvenanceRadiobutton],
  ["provenance-checkbox", ProvenanceCheckbox],
  ["provenance-inputtext", ProvenanceInputtext],
];

export function defineWidgets(): void {
  for (const [tag, ctor] of registry) {
    if (!customElements.get(tag)) customElements.define(tag, ctor);
  }
}
