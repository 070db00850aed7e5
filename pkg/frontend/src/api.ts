/**
 * Typed client for the search service JSON API.
 *
 * At most one search request is in flight; a newer submission aborts
 * the older one so a slow response can never overwrite a fresh page.
 */

import type { FacetField, UiQueryState } from "./state.js";
import { searchParams } from "./state.js";

export interface SearchHit {
  id: number;
  title: string;
  summary: string;
}

export interface FacetEntry {
  value: string;
  count: number;
}

export interface SearchResponse {
  total: number;
  page: number;
  page_size: number;
  results: SearchHit[];
  facets: Record<FacetField, FacetEntry[]>;
  applied_refinements: Array<[string, string]>;
  all_results_link: string;
}

export interface DocumentDetail {
  id: number;
  title: string;
  file_path: string;
  elements: string[];
  atom_sites: Array<[string, number, number, number]>;
  methods: string[];
  basis_sets: string[];
  job_types: string[];
  charge: number | null;
  multiplicity: number | null;
  energy: number | null;
  degrees_of_freedom: number | null;
  flags: string[];
  missing: string[];
}

export interface MetaResponse {
  doc_count: number;
  snapshot_version: number;
  options: Record<FacetField, string[]>;
}

export class ApiError extends Error {
  code: string;

  constructor(code: string, message: string) {
    super(message);
    this.code = code;
  }
}

async function getJson<T>(url: string, signal?: AbortSignal): Promise<T> {
  const resp = await fetch(url, { signal });
  if (!resp.ok) {
    let code = `HTTP${resp.status}`;
    let message = resp.statusText;
    try {
      const body = await resp.json();
      if (body && typeof body.code === "string") code = body.code;
      if (body && typeof body.message === "string") message = body.message;
    } catch {
      // non-JSON error body, keep the status line
    }
    throw new ApiError(code, message);
  }
  return (await resp.json()) as T;
}

let inFlight: AbortController | null = null;

export async function runSearch(state: UiQueryState): Promise<SearchResponse> {
  if (inFlight !== null) inFlight.abort();
  const controller = new AbortController();
  inFlight = controller;
  try {
    return await getJson<SearchResponse>(
      `/api/search?${searchParams(state).toString()}`,
      controller.signal,
    );
  } finally {
    if (inFlight === controller) inFlight = null; // an aborted call must not clear its successor
  }
}

export function fetchDoc(id: number): Promise<DocumentDetail> {
  return getJson<DocumentDetail>(`/api/doc/${id}`);
}

export function fetchMeta(): Promise<MetaResponse> {
  return getJson<MetaResponse>("/api/meta");
}
