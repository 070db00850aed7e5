import { describe, expect, it } from "vitest";

import { SYMBOLS } from "../src/periodic.js";
import {
  canSubmit,
  clickAllResults,
  clickFacet,
  effectiveClause,
  emptyState,
  parseState,
  searchParams,
  serializeState,
  setPage,
  textboxText,
  toggleElement,
  type FacetField,
  type UiQueryState,
} from "../src/state.js";

describe("element toggling", () => {
  it("is an involution on the selection", () => {
    const s0 = emptyState();
    const s1 = toggleElement(s0, "O");
    const s2 = toggleElement(s1, "O");
    expect(s1.elements).toEqual(["O"]);
    expect(s2.elements).toEqual([]);
  });

  it("keeps click order in the textbox", () => {
    let s = emptyState();
    s = toggleElement(s, "O");
    s = toggleElement(s, "H");
    expect(textboxText(s)).toBe("O, H");
    s = toggleElement(s, "O"); // deselect the first pick
    expect(textboxText(s)).toBe("H");
  });

  it("does not mutate the previous state", () => {
    const s0 = toggleElement(emptyState(), "C");
    const s1 = toggleElement(s0, "N");
    expect(s0.elements).toEqual(["C"]);
    expect(s1.elements).toEqual(["C", "N"]);
  });
});

describe("submit validation", () => {
  it("blocks a query with zero elements", () => {
    expect(canSubmit(emptyState())).toBe(false);
    expect(canSubmit(toggleElement(emptyState(), "H"))).toBe(true);
  });
});

describe("clause resolution", () => {
  it("lets the textbox override the drop-down when non-empty", () => {
    expect(effectiveClause("DFT Methods", "")).toBe("DFT Methods");
    expect(effectiveClause("DFT Methods", "  ")).toBe("DFT Methods");
    expect(effectiveClause("DFT Methods", "3-21G*")).toBe("3-21G*");
    expect(effectiveClause("", "cam-b3lyp ")).toBe("cam-b3lyp");
  });
});

describe("facet refinement", () => {
  const base: UiQueryState = { ...emptyState(), elements: ["H", "O"], page: 4 };

  it("appends the refinement and resets the page", () => {
    const s = clickFacet(base, "job_type", "Opt");
    expect(s.refinements).toEqual([["job_type", "Opt"]]);
    expect(s.page).toBe(1);
    expect(s.elements).toEqual(["H", "O"]);
  });

  it("is idempotent for an already-applied facet", () => {
    const once = clickFacet(base, "method", "DFT Methods");
    const twice = clickFacet(once, "method", "DFT Methods");
    expect(twice.refinements).toEqual(once.refinements);
  });

  it("all results clears refinements but keeps the base query", () => {
    let s = clickFacet(base, "job_type", "Opt");
    s = clickFacet(s, "method", "Hartree-Fock");
    const cleared = clickAllResults(s);
    expect(cleared.refinements).toEqual([]);
    expect(cleared.elements).toEqual(base.elements);
    expect(cleared.mode).toBe(base.mode);
    expect(cleared.op).toBe(base.op);
  });
});

describe("search request parameters", () => {
  it("joins elements and skips unconstrained clauses", () => {
    let s = emptyState();
    s = toggleElement(s, "O");
    s = toggleElement(s, "H");
    s.method = "Any";
    s.jobtype = "Opt";
    const params = searchParams(s);
    expect(params.get("elements")).toBe("O,H");
    expect(params.get("method")).toBeNull();
    expect(params.get("jobtype")).toBe("Opt");
    expect(params.get("mode")).toBeNull(); // contains is the default
    expect(params.get("op")).toBeNull();
  });

  it("repeats refine pairs as field:value", () => {
    let s = { ...emptyState(), elements: ["H"] };
    s = clickFacet(s, "method", "DFT Methods");
    s = clickFacet(s, "basis_set", "gen");
    expect(searchParams(s).getAll("refine")).toEqual(["method:DFT Methods", "basis_set:gen"]);
  });
});

// === URL state ===

// tiny deterministic PRNG so the round-trip sweep is reproducible
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const CLAUSES = ["", "Any", "Opt", "DFT Methods", "3-21G*", "cam-b3lyp", "opt(ts,calcfc)"];
const FACETS: Array<[FacetField, string]> = [
  ["job_type", "Opt"],
  ["job_type", "Freq"],
  ["method", "DFT Methods"],
  ["method", "Hartree-Fock"],
  ["basis_set", "gen"],
  ["basis_set", "6-31g(d)"],
];

function randomReachableState(rand: () => number): UiQueryState {
  // build through the state functions only, so every case is a state
  // the UI itself can reach
  let s = emptyState();
  const picks = 1 + Math.floor(rand() * 4);
  for (let i = 0; i < picks; i++) {
    s = toggleElement(s, SYMBOLS[Math.floor(rand() * SYMBOLS.length)]!);
  }
  s.mode = rand() < 0.4 ? "exact" : "contains";
  s.op = rand() < 0.4 ? "or" : "and";
  s.method = CLAUSES[Math.floor(rand() * CLAUSES.length)]!;
  s.jobtype = CLAUSES[Math.floor(rand() * CLAUSES.length)]!;
  s.basis = CLAUSES[Math.floor(rand() * CLAUSES.length)]!;
  const refinements = Math.floor(rand() * 3);
  for (let i = 0; i < refinements; i++) {
    const [field, value] = FACETS[Math.floor(rand() * FACETS.length)]!;
    s = clickFacet(s, field, value);
  }
  if (rand() < 0.5) s = setPage(s, 1 + Math.floor(rand() * 9));
  return s;
}

describe("URL round-trip", () => {
  it("serialize(parse(url)) is the identity on 300 reachable states", () => {
    const rand = mulberry32(20260817);
    for (let i = 0; i < 300; i++) {
      const state = randomReachableState(rand);
      const url = serializeState(state);
      expect(serializeState(parseState(url))).toBe(url);
    }
  });

  it("keeps element click order and refinement order", () => {
    let s = emptyState();
    for (const symbol of ["U", "H", "Fe"]) s = toggleElement(s, symbol);
    s = clickFacet(s, "method", "DFT Methods");
    s = clickFacet(s, "job_type", "Opt");
    s = setPage(s, 3);
    const back = parseState(serializeState(s));
    expect(back.elements).toEqual(["U", "H", "Fe"]);
    expect(back.refinements).toEqual([["method", "DFT Methods"], ["job_type", "Opt"]]);
    expect(back.page).toBe(3);
  });

  it("the pristine state serializes to the bare path", () => {
    expect(serializeState(emptyState())).toBe("");
  });

  it("drops junk from hand-edited URLs instead of sending it", () => {
    const s = parseState("?elements=H,Zz,h,O&mode=sideways&op=nand&page=-2&refine=energy:low&refine=method");
    expect(s.elements).toEqual(["H", "O"]); // junk and duplicates gone
    expect(s.mode).toBe("contains");
    expect(s.op).toBe("and");
    expect(s.page).toBe(1);
    expect(s.refinements).toEqual([]);
  });

  it("canonicalizes symbol casing from the URL", () => {
    expect(parseState("?elements=fe,AU").elements).toEqual(["Fe", "Au"]);
  });
});
