/**
 * Query-builder state and its URL form.
 *
 * The state mirrors the /api/search parameter space exactly, and
 * serializes to the page URL so every view is bookmarkable.  All
 * functions are pure; the DOM layer owns the single mutable copy.
 */

import { canonicalSymbol } from "./periodic.js";

export type ElementMode = "exact" | "contains";
export type Connective = "and" | "or";
export type FacetField = "job_type" | "method" | "basis_set";

export const FACET_FIELDS: readonly FacetField[] = ["job_type", "method", "basis_set"];

export interface UiQueryState {
  elements: string[]; // click order, not sorted
  mode: ElementMode;
  method: string; // "" or "Any" means unconstrained
  jobtype: string;
  basis: string;
  op: Connective;
  refinements: Array<[FacetField, string]>;
  page: number;
}

export function emptyState(): UiQueryState {
  return {
    elements: [],
    mode: "contains",
    method: "",
    jobtype: "",
    basis: "",
    op: "and",
    refinements: [],
    page: 1,
  };
}

export function toggleElement(state: UiQueryState, symbol: string): UiQueryState {
  const elements = state.elements.includes(symbol)
    ? state.elements.filter((s) => s !== symbol)
    : [...state.elements, symbol];
  return { ...state, elements };
}

/** The read-only textbox below the table: selection in click order. */
export function textboxText(state: UiQueryState): string {
  return state.elements.join(", ");
}

/** Elements are the one mandatory field. */
export function canSubmit(state: UiQueryState): boolean {
  return state.elements.length > 0;
}

/** Free text wins over the drop-down whenever it is non-blank. */
export function effectiveClause(dropdown: string, text: string): string {
  const typed = text.trim();
  return typed !== "" ? typed : dropdown;
}

export function clickFacet(state: UiQueryState, field: FacetField, value: string): UiQueryState {
  const applied = state.refinements.some(([f, v]) => f === field && v === value);
  const refinements = applied ? state.refinements : [...state.refinements, [field, value] as [FacetField, string]];
  return { ...state, refinements, page: 1 };
}

export function clickAllResults(state: UiQueryState): UiQueryState {
  return { ...state, refinements: [], page: 1 };
}

export function setPage(state: UiQueryState, page: number): UiQueryState {
  return { ...state, page: Math.max(1, Math.floor(page)) };
}

function unconstrained(clause: string): boolean {
  const c = clause.trim();
  return c === "" || c.toLowerCase() === "any";
}

/**
 * Parameters for GET /api/search.  Every request the UI sends is built
 * here, so client validation and the API's 400 rules stay in lockstep.
 */
export function searchParams(state: UiQueryState): URLSearchParams {
  const params = new URLSearchParams();
  params.set("elements", state.elements.join(","));
  if (state.mode !== "contains") params.set("mode", state.mode);
  if (!unconstrained(state.method)) params.set("method", state.method.trim());
  if (!unconstrained(state.jobtype)) params.set("jobtype", state.jobtype.trim());
  if (!unconstrained(state.basis)) params.set("basis", state.basis.trim());
  if (state.op !== "and") params.set("op", state.op);
  for (const [field, value] of state.refinements) {
    params.append("refine", `${field}:${value}`);
  }
  if (state.page !== 1) params.set("page", String(state.page));
  return params;
}

/** Page URL for the history stack ("" for the pristine state). */
export function serializeState(state: UiQueryState): string {
  const params = searchParams(state);
  if (state.elements.length === 0) params.delete("elements");
  const text = params.toString();
  return text === "" ? "" : `?${text}`;
}

function isFacetField(raw: string): raw is FacetField {
  return (FACET_FIELDS as readonly string[]).includes(raw);
}

/**
 * Inverse of serializeState, tolerant of hand-edited URLs: unknown
 * params, junk symbols, bad page numbers and malformed refine entries
 * are dropped rather than carried into a request the API would reject.
 */
export function parseState(search: string): UiQueryState {
  const params = new URLSearchParams(search);
  const state = emptyState();

  const seen = new Set<string>();
  for (const raw of (params.get("elements") ?? "").split(",")) {
    const symbol = canonicalSymbol(raw);
    if (symbol !== null && !seen.has(symbol)) {
      seen.add(symbol);
      state.elements.push(symbol);
    }
  }

  if (params.get("mode") === "exact") state.mode = "exact";
  if (params.get("op") === "or") state.op = "or";
  state.method = (params.get("method") ?? "").trim();
  state.jobtype = (params.get("jobtype") ?? "").trim();
  state.basis = (params.get("basis") ?? "").trim();

  for (const raw of params.getAll("refine")) {
    const cut = raw.indexOf(":");
    if (cut < 1) continue;
    const field = raw.slice(0, cut);
    const value = raw.slice(cut + 1);
    if (isFacetField(field) && value !== "") {
      if (!state.refinements.some(([f, v]) => f === field && v === value)) {
        state.refinements.push([field, value]);
      }
    }
  }

  const page = Number(params.get("page") ?? "1");
  if (Number.isInteger(page) && page >= 1) state.page = page;
  return state;
}
