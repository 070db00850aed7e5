/**
 * DOM construction for the three views: the query builder, the results
 * page with its facet sidebar, and the document detail page.  No
 * framework; every view is rebuilt from scratch on each state change,
 * which is cheap at 10 results a page.
 */

import type { DocumentDetail, FacetEntry, SearchResponse } from "./api.js";
import { ELEMENT_CELLS } from "./periodic.js";
import type { FacetField, UiQueryState } from "./state.js";
import { FACET_FIELDS, textboxText } from "./state.js";

export interface Handlers {
  onToggleElement(symbol: string): void;
  onSubmit(): void;
  onFacet(field: FacetField, value: string): void;
  onAllResults(): void;
  onPage(page: number): void;
  onOpenDoc(id: number): void;
  onBackToResults(): void;
}

const FIELD_LABELS: Record<FacetField, string> = {
  job_type: "Job Type",
  method: "Method Used",
  basis_set: "Basis Set",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text !== undefined) node.textContent = text;
  return node;
}

// === query builder ===

export function renderPicker(root: HTMLElement, state: UiQueryState, handlers: Handlers): void {
  root.textContent = "";
  const grid = el("div", { class: "ptable" });
  for (const cell of ELEMENT_CELLS) {
    const btn = el("button", {
      type: "button",
      class: state.elements.includes(cell.symbol) ? "element selected" : "element",
      style: `grid-row:${cell.row};grid-column:${cell.col}`,
      title: `${cell.z} ${cell.symbol}`,
      "data-symbol": cell.symbol,
    }, cell.symbol);
    btn.addEventListener("click", () => handlers.onToggleElement(cell.symbol));
    grid.appendChild(btn);
  }
  root.appendChild(grid);

  const box = el("input", {
    type: "text",
    readonly: "readonly",
    class: "element-box",
    placeholder: "click elements above",
    "aria-label": "selected elements",
  });
  box.value = textboxText(state);
  root.appendChild(box);
}

export function fillOptions(select: HTMLSelectElement, options: string[], current: string): void {
  select.textContent = "";
  for (const name of options) {
    const opt = el("option", { value: name === "Any" ? "" : name }, name);
    select.appendChild(opt);
  }
  select.value = current;
}

// === results ===

function facetGroup(
  field: FacetField,
  entries: FacetEntry[],
  state: UiQueryState,
  handlers: Handlers,
): HTMLElement {
  const group = el("div", { class: "facet-group" });
  group.appendChild(el("h3", {}, FIELD_LABELS[field]));
  const list = el("ul");
  for (const entry of entries) {
    const item = el("li");
    const applied = state.refinements.some(([f, v]) => f === field && v === entry.value);
    const link = el(
      "a",
      { href: "#", class: applied ? "facet applied" : "facet" },
      `${entry.value} (${entry.count})`,
    );
    link.addEventListener("click", (ev) => {
      ev.preventDefault();
      handlers.onFacet(field, entry.value);
    });
    item.appendChild(link);
    list.appendChild(item);
  }
  group.appendChild(list);
  return group;
}

export function renderResults(
  root: HTMLElement,
  facetRoot: HTMLElement,
  state: UiQueryState,
  response: SearchResponse,
  handlers: Handlers,
): void {
  root.textContent = "";
  facetRoot.textContent = "";

  const head = el("div", { class: "results-head" });
  head.appendChild(el("span", { class: "total" }, `${response.total} results`));
  if (state.refinements.length > 0) {
    const chips = el("span", { class: "chips" });
    for (const [field, value] of state.refinements) {
      chips.appendChild(el("span", { class: "chip" }, `${FIELD_LABELS[field]}: ${value}`));
    }
    const all = el("a", { href: "#", class: "all-results" }, "All Results");
    all.addEventListener("click", (ev) => {
      ev.preventDefault();
      handlers.onAllResults();
    });
    chips.appendChild(all);
    head.appendChild(chips);
  }
  root.appendChild(head);

  const list = el("ol", { class: "hits", start: String((response.page - 1) * response.page_size + 1) });
  for (const hit of response.results) {
    const item = el("li");
    const link = el("a", { href: `?doc=${hit.id}` }, hit.title);
    link.addEventListener("click", (ev) => {
      ev.preventDefault();
      handlers.onOpenDoc(hit.id);
    });
    item.appendChild(link);
    item.appendChild(el("div", { class: "summary" }, hit.summary));
    list.appendChild(item);
  }
  root.appendChild(list);

  const pages = Math.ceil(response.total / response.page_size);
  if (pages > 1) {
    const pager = el("div", { class: "pager" });
    const prev = el("button", { type: "button" }, "prev");
    if (response.page <= 1) prev.setAttribute("disabled", "disabled");
    prev.addEventListener("click", () => handlers.onPage(response.page - 1));
    const next = el("button", { type: "button" }, "next");
    if (response.page >= pages) next.setAttribute("disabled", "disabled");
    next.addEventListener("click", () => handlers.onPage(response.page + 1));
    pager.appendChild(prev);
    pager.appendChild(el("span", {}, `page ${response.page} of ${pages}`));
    pager.appendChild(next);
    root.appendChild(pager);
  }

  for (const field of FACET_FIELDS) {
    const entries = response.facets[field] ?? [];
    if (entries.length > 0) facetRoot.appendChild(facetGroup(field, entries, state, handlers));
  }
}

// === document detail ===

function detailRow(table: HTMLElement, label: string, value: string): void {
  const row = el("tr");
  row.appendChild(el("th", {}, label));
  row.appendChild(el("td", {}, value));
  table.appendChild(row);
}

export function renderDetail(root: HTMLElement, doc: DocumentDetail, handlers: Handlers): void {
  root.textContent = "";
  const back = el("a", { href: "#", class: "back" }, "back to results");
  back.addEventListener("click", (ev) => {
    ev.preventDefault();
    handlers.onBackToResults();
  });
  root.appendChild(back);
  root.appendChild(el("h2", {}, doc.title));

  const table = el("table", { class: "detail" });
  detailRow(table, "id", String(doc.id));
  detailRow(table, "file path", doc.file_path);
  detailRow(table, "elements", doc.elements.join(", "));
  detailRow(table, "methods", doc.methods.join(", ") || "-");
  detailRow(table, "basis sets", doc.basis_sets.join(", ") || "-");
  detailRow(table, "job types", doc.job_types.join(", ") || "-");
  detailRow(table, "charge", doc.charge === null ? "-" : String(doc.charge));
  detailRow(table, "multiplicity", doc.multiplicity === null ? "-" : String(doc.multiplicity));
  detailRow(table, "energy (Hartree)", doc.energy === null ? "-" : String(doc.energy));
  detailRow(table, "degrees of freedom",
    doc.degrees_of_freedom === null ? "-" : String(doc.degrees_of_freedom));
  detailRow(table, "flags", doc.flags.join(", ") || "-");
  detailRow(table, "missing attributes", doc.missing.join(", ") || "-");
  root.appendChild(table);

  root.appendChild(el("h3", {}, "coordinates (Angstrom)"));
  if (doc.atom_sites.length === 0) {
    root.appendChild(el("p", { class: "muted" }, "no orientation block in this file"));
    return;
  }
  const coords = el("table", { class: "coords" });
  const head = el("tr");
  for (const label of ["#", "atom", "x", "y", "z"]) head.appendChild(el("th", {}, label));
  coords.appendChild(head);
  doc.atom_sites.forEach(([symbol, x, y, z], i) => {
    const row = el("tr");
    row.appendChild(el("td", {}, String(i + 1)));
    row.appendChild(el("td", {}, symbol));
    for (const v of [x, y, z]) row.appendChild(el("td", { class: "num" }, v.toFixed(6)));
    coords.appendChild(row);
  });
  root.appendChild(coords);
}

export function renderError(root: HTMLElement, message: string): void {
  root.textContent = "";
  root.appendChild(el("p", { class: "error" }, message));
}

export function renderNotice(root: HTMLElement, message: string): void {
  root.textContent = "";
  root.appendChild(el("p", { class: "notice" }, message));
}
