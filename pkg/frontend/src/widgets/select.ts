/**
 * Dropdown and multiselect: a native <select> control whose provenance
 * overlay is the same per-option bar/interval list used by the button-style
 * selection widgets, shown as a popup list under the control.
 */
import { OptionProvenanceWidget } from "./options.js";

abstract class SelectProvenanceWidget extends OptionProvenanceWidget {
  protected readonly inputType = "checkbox" as const; // unused: select control

  protected override renderControl(host: HTMLElement): void {
    host.replaceChildren();
    const select = document.createElement("select");
    select.multiple = this.multiple;
    select.disabled = this.frozen;
    const selected = this.selected;
    if (!this.multiple) {
      const blank = document.createElement("option");
      blank.value = "";
      blank.textContent = "";
      select.append(blank);
    }
    for (const opt of this.options) {
      const o = document.createElement("option");
      o.value = opt.id;
      o.textContent = opt.label;
      o.selected = selected.has(opt.id);
      select.append(o);
    }
    select.addEventListener("change", () => {
      const picked = Array.from(select.selectedOptions)
        .map((o) => o.value)
        .filter((v) => v !== "");
      this.onUserInput(picked);
    });
    host.append(select);
  }
}

export class ProvenanceDropdown extends SelectProvenanceWidget {
  protected readonly multiple = false;
}

export class ProvenanceMultiselect extends SelectProvenanceWidget {
  protected readonly multiple = true;
}
