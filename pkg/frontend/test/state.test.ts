import { describe, expect, it } from "vitest";

import type { Generation, RetrievedPair } from "../src/api.js";
import {
  applyGeneration,
  applyK,
  applyMark,
  applyRetrieve,
  applySent,
  exportSessionCsv,
  newSession,
  parseKeywords,
} from "../src/state.js";

const pair: RetrievedPair = {
  pair_id: "boar/bore",
  pun_word: "boar",
  alt_word: "bore",
  pun_gloss: "an uncastrated male hog",
  alt_gloss: "a dull, uninteresting person",
  kind: "heterographic",
  score: -61.2,
  rank: 1,
};

function generation(id: string, text = "hunts deer boar"): Generation {
  return {
    generation_id: id,
    keywords: ["hunts", "deer"],
    pun_word: "boar",
    alt_word: "bore",
    pun_gloss: "an uncastrated male hog",
    alt_gloss: "a dull, uninteresting person",
    prompt: "generate a pun that situates in hunts, deer, ...",
    text,
    backend_id: "stub:template",
  };
}

describe("parseKeywords", () => {
  it("splits, trims, lowercases and dedups", () => {
    expect(parseKeywords(" Hunts ,  DEER , hunts,")).toEqual(["hunts", "deer"]);
  });

  it("collapses internal whitespace", () => {
    expect(parseKeywords("orchestra   conductors")).toEqual([
      "orchestra conductors",
    ]);
  });

  it("empty input gives empty list", () => {
    expect(parseKeywords("  , ,")).toEqual([]);
  });
});

describe("reducers", () => {
  it("retrieve replaces pairs and clears current generations", () => {
    let state = newSession("s1");
    state = applyRetrieve(state, ["hunts", "deer"], [pair], 0);
    state = applyGeneration(state, pair.pair_id, generation("g1"));
    expect(Object.keys(state.current)).toEqual(["boar/bore"]);
    state = applyRetrieve(state, ["whale"], [], 5);
    expect(state.current).toEqual({});
    expect(state.shortfall).toBe(5);
    // previously seen generations survive so marks stay resolvable
    expect(state.seen.g1).toBeDefined();
  });

  it("generation appends to history", () => {
    let state = newSession("s1");
    state = applyRetrieve(state, ["hunts", "deer"], [pair], 0);
    state = applyGeneration(state, pair.pair_id, generation("g1"));
    state = applyGeneration(state, pair.pair_id, generation("g2", "again"));
    expect(state.history.map((h) => h.pun)).toEqual([
      "hunts deer boar", "again",
    ]);
  });

  it("marks must reference a seen generation", () => {
    const state = newSession("s1");
    expect(() => applyMark(state, "ghost", 1)).toThrow(/unknown generation/);
  });

  it("mark then sent is tracked separately", () => {
    let state = newSession("s1");
    state = applyRetrieve(state, ["hunts", "deer"], [pair], 0);
    state = applyGeneration(state, pair.pair_id, generation("g1"));
    state = applyMark(state, "g1", 1);
    expect(state.sent.g1).toBeUndefined();
    state = applySent(state, "g1", 1);
    expect(state.sent.g1).toBe(1);
  });

  it("reducers do not mutate their input", () => {
    const state = newSession("s1");
    const next = applyK(state, 9);
    expect(state.k).toBe(5);
    expect(next.k).toBe(9);
  });

  it("rejects a non-positive k", () => {
    expect(() => applyK(newSession("s1"), 0)).toThrow();
  });
});

describe("exportSessionCsv", () => {
  const HEADER =
    "generation_id,judge_id,context,pun_word,alt_word,pun_gloss," +
    "alt_gloss,text,success";

  it("empty session gives a header-only file", () => {
    const csv = exportSessionCsv(newSession("s1"));
    expect(csv).toBe(HEADER + "\r\n");
  });

  it("three marks give three rows", () => {
    let state = newSession("sess-42");
    state = applyRetrieve(state, ["hunts", "deer"], [pair], 0);
    for (const id of ["g1", "g2", "g3"]) {
      state = applyGeneration(state, pair.pair_id, generation(id));
      state = applyMark(state, id, id === "g2" ? 0 : 1);
    }
    const lines = exportSessionCsv(state).trimEnd().split("\r\n");
    expect(lines).toHaveLength(4);
    expect(lines[0]).toBe(HEADER);
    expect(lines[1].startsWith("g1,sess-42,hunts|deer,boar,bore,")).toBe(true);
    expect(lines[2].endsWith(",0")).toBe(true);
  });

  it("quotes fields containing commas", () => {
    let state = newSession("s1");
    state = applyRetrieve(state, ["hunts", "deer"], [pair], 0);
    state = applyGeneration(state, pair.pair_id, generation("g1"));
    state = applyMark(state, "g1", 1);
    const row = exportSessionCsv(state).split("\r\n")[1];
    expect(row).toContain('"a dull, uninteresting person"');
  });

  it("computes no rates: rows are raw marks only", () => {
    let state = newSession("s1");
    state = applyRetrieve(state, ["hunts", "deer"], [pair], 0);
    state = applyGeneration(state, pair.pair_id, generation("g1"));
    state = applyMark(state, "g1", 1);
    const lines = exportSessionCsv(state).trimEnd().split("\r\n");
    // header + one row per mark, nothing aggregated
    expect(lines).toHaveLength(2);
    expect(lines[1].endsWith(",1")).toBe(true);
    expect(exportSessionCsv(state)).not.toContain("%");
  });
});
