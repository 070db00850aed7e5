/**
 * Wiring: one mutable UiQueryState, history integration, and the
 * submit/refine loop against the JSON API.
 */

import { ApiError, fetchDoc, fetchMeta, runSearch } from "./api.js";
import { fillOptions, renderDetail, renderError, renderNotice, renderPicker, renderResults } from "./render.js";
import type { FacetField, UiQueryState } from "./state.js";
import {
  canSubmit,
  clickAllResults,
  clickFacet,
  effectiveClause,
  emptyState,
  parseState,
  serializeState,
  setPage,
  toggleElement,
} from "./state.js";

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing #${id}`);
  return node as T;
}

const pickerRoot = byId<HTMLDivElement>("picker");
const resultsRoot = byId<HTMLDivElement>("results");
const facetsRoot = byId<HTMLDivElement>("facets");
const detailRoot = byId<HTMLDivElement>("detail");
const statusRoot = byId<HTMLDivElement>("status");
const form = byId<HTMLFormElement>("query-form");

const modeSelect = byId<HTMLSelectElement>("mode");
const opSelect = byId<HTMLSelectElement>("op");
const methodSelect = byId<HTMLSelectElement>("method-select");
const jobSelect = byId<HTMLSelectElement>("job-select");
const basisSelect = byId<HTMLSelectElement>("basis-select");
const methodText = byId<HTMLInputElement>("method-text");
const jobText = byId<HTMLInputElement>("job-text");
const basisText = byId<HTMLInputElement>("basis-text");

let state: UiQueryState = emptyState();

function readControls(): void {
  state.mode = modeSelect.value === "exact" ? "exact" : "contains";
  state.op = opSelect.value === "or" ? "or" : "and";
  state.method = effectiveClause(methodSelect.value, methodText.value);
  state.jobtype = effectiveClause(jobSelect.value, jobText.value);
  state.basis = effectiveClause(basisSelect.value, basisText.value);
}

function writeControls(): void {
  modeSelect.value = state.mode;
  opSelect.value = state.op;
  // a clause that is not one of the drop-down options came from free text
  setClauseControls(methodSelect, methodText, state.method);
  setClauseControls(jobSelect, jobText, state.jobtype);
  setClauseControls(basisSelect, basisText, state.basis);
}

function setClauseControls(select: HTMLSelectElement, text: HTMLInputElement, value: string): void {
  const options = Array.from(select.options).map((o) => o.value);
  if (options.includes(value)) {
    select.value = value;
    text.value = "";
  } else {
    select.value = "";
    text.value = value;
  }
}

function pushUrl(): void {
  const url = serializeState(state);
  history.pushState(null, "", url === "" ? window.location.pathname : url);
}

const handlers = {
  onToggleElement(symbol: string): void {
    state = toggleElement(state, symbol);
    renderPicker(pickerRoot, state, handlers);
  },
  onSubmit(): void {
    readControls();
    state = setPage(state, 1);
    if (!canSubmit(state)) {
      renderNotice(statusRoot, "select at least one element");
      return;
    }
    pushUrl();
    void showResults();
  },
  onFacet(field: FacetField, value: string): void {
    state = clickFacet(state, field, value);
    pushUrl();
    void showResults();
  },
  onAllResults(): void {
    state = clickAllResults(state);
    pushUrl();
    void showResults();
  },
  onPage(page: number): void {
    state = setPage(state, page);
    pushUrl();
    void showResults();
  },
  onOpenDoc(id: number): void {
    history.pushState(null, "", `?doc=${id}`);
    void showDetail(id);
  },
  onBackToResults(): void {
    history.back();
  },
};

async function showResults(): Promise<void> {
  detailRoot.hidden = true;
  statusRoot.textContent = "";
  renderNotice(resultsRoot, "searching...");
  try {
    const response = await runSearch(state);
    renderResults(resultsRoot, facetsRoot, state, response, handlers);
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") return;
    const message = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
    renderError(resultsRoot, message);
    facetsRoot.textContent = "";
  }
}

async function showDetail(id: number): Promise<void> {
  detailRoot.hidden = false;
  resultsRoot.textContent = "";
  facetsRoot.textContent = "";
  statusRoot.textContent = "";
  try {
    renderDetail(detailRoot, await fetchDoc(id), handlers);
  } catch (err) {
    const message = err instanceof ApiError ? `${err.code}: ${err.message}` : String(err);
    renderError(detailRoot, message);
  }
}

function routeFromLocation(): void {
  const params = new URLSearchParams(window.location.search);
  const doc = Number(params.get("doc"));
  if (Number.isInteger(doc) && doc >= 1) {
    void showDetail(doc);
    return;
  }
  state = parseState(window.location.search);
  renderPicker(pickerRoot, state, handlers);
  writeControls();
  detailRoot.hidden = true;
  if (canSubmit(state)) {
    void showResults();
  } else {
    resultsRoot.textContent = "";
    facetsRoot.textContent = "";
  }
}

async function boot(): Promise<void> {
  try {
    const meta = await fetchMeta();
    fillOptions(jobSelect, meta.options.job_type, "");
    fillOptions(methodSelect, meta.options.method, "");
    fillOptions(basisSelect, meta.options.basis_set, "");
    renderNotice(statusRoot, `${meta.doc_count} documents indexed`);
  } catch (err) {
    renderError(statusRoot, `cannot reach the search service: ${String(err)}`);
  }
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    handlers.onSubmit();
  });
  window.addEventListener("popstate", routeFromLocation);
  routeFromLocation();
}

void boot();
