/** Session state: a pure function of server responses plus local marks.
 *
 * Reducers never mutate; every transition returns a fresh state object so
 * rendering can diff by identity. No metric is computed here; the export is
 * raw per-generation marks in the judging-sheet format the evaluation CLI
 * imports directly.
 */

import type { Generation, RetrievedPair } from "./api.js";

export interface HistoryEntry {
  keywords: string[];
  pairId: string;
  pun: string;
}

export interface SessionState {
  sessionId: string;
  keywords: string[];
  k: number;
  pairs: RetrievedPair[];
  shortfall: number;
  /** generations for the currently shown pair list, keyed by pair_id */
  current: Record<string, Generation>;
  /** every generation seen this session, keyed by generation_id */
  seen: Record<string, Generation>;
  /** local success marks: generation_id -> 0|1 */
  marks: Record<string, 0 | 1>;
  /** marks acknowledged by the server */
  sent: Record<string, 0 | 1>;
  history: HistoryEntry[];
  banner: string | null;
}

export function newSession(sessionId?: string): SessionState {
  return {
    sessionId: sessionId ?? `ui-${Math.random().toString(36).slice(2, 10)}`,
    keywords: [],
    k: 5,
    pairs: [],
    shortfall: 0,
    current: {},
    seen: {},
    marks: {},
    sent: {},
    history: [],
    banner: null,
  };
}

export function parseKeywords(raw: string): string[] {
  const seen = new Set<string>();
  const out: string[] = [];
  for (const part of raw.split(",")) {
    const keyword = part.trim().toLowerCase().replace(/\s+/g, " ");
    if (keyword && !seen.has(keyword)) {
      seen.add(keyword);
      out.push(keyword);
    }
  }
  return out;
}

export function applyRetrieve(
  state: SessionState,
  keywords: string[],
  pairs: RetrievedPair[],
  shortfall: number,
): SessionState {
  return {
    ...state,
    keywords,
    pairs,
    shortfall,
    current: {},
    banner: null,
  };
}

export function applyBanner(state: SessionState, banner: string): SessionState {
  return { ...state, banner };
}

export function applyK(state: SessionState, k: number): SessionState {
  if (!Number.isInteger(k) || k < 1) throw new Error(`bad k: ${k}`);
  return { ...state, k };
}

export function applyGeneration(
  state: SessionState,
  pairId: string,
  generation: Generation,
): SessionState {
  return {
    ...state,
    current: { ...state.current, [pairId]: generation },
    seen: { ...state.seen, [generation.generation_id]: generation },
    history: [
      ...state.history,
      { keywords: state.keywords, pairId, pun: generation.text },
    ],
  };
}

export function applyMark(
  state: SessionState,
  generationId: string,
  success: 0 | 1,
): SessionState {
  if (!(generationId in state.seen)) {
    throw new Error(`mark references unknown generation ${generationId}`);
  }
  return { ...state, marks: { ...state.marks, [generationId]: success } };
}

export function applySent(
  state: SessionState,
  generationId: string,
  success: 0 | 1,
): SessionState {
  return { ...state, sent: { ...state.sent, [generationId]: success } };
}

const SHEET_COLUMNS = [
  "generation_id", "judge_id", "context", "pun_word", "alt_word",
  "pun_gloss", "alt_gloss", "text", "success",
] as const;

function csvField(value: string): string {
  if (/[",\n\r]/.test(value)) {
    return '"' + value.replace(/"/g, '""') + '"';
  }
  return value;
}

/** Judging-sheet CSV: one row per marked generation. */
export function exportSessionCsv(state: SessionState): string {
  const lines = [SHEET_COLUMNS.join(",")];
  for (const [generationId, success] of Object.entries(state.marks)) {
    const gen = state.seen[generationId];
    if (!gen) continue;
    lines.push([
      generationId,
      state.sessionId,
      gen.keywords.join("|"),
      gen.pun_word,
      gen.alt_word,
      gen.pun_gloss,
      gen.alt_gloss,
      gen.text,
      String(success),
    ].map(csvField).join(","));
  }
  return lines.join("\r\n") + "\r\n";
}
