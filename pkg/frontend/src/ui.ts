/** DOM rendering and event wiring. Rendering is a pure projection of the
 * session state; the only client-side bookkeeping is the latest-wins retrieve
 * request and the debounce timer.
 */

import {
  AlreadyRecordedError,
  ApiClient,
  BackendUnavailableError,
} from "./api.js";
import {
  SessionState,
  applyBanner,
  applyGeneration,
  applyK,
  applyMark,
  applyRetrieve,
  applySent,
  exportSessionCsv,
  newSession,
  parseKeywords,
} from "./state.js";

export const DEBOUNCE_MS = 300;

export interface Controller {
  state(): SessionState;
  onInput(raw: string): void;
  onKChange(k: number): void;
  generateFor(pairId: string): Promise<void>;
  mark(generationId: string, success: 0 | 1): Promise<void>;
  exportCsv(): string;
  flushPending(): Promise<void>;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function render(root: HTMLElement, state: SessionState): void {
  const banner = root.querySelector<HTMLElement>("#banner");
  if (banner) {
    banner.textContent = state.banner ?? "";
    banner.hidden = !state.banner;
  }

  const list = root.querySelector<HTMLElement>("#pairs");
  if (!list) return;

  if (!state.keywords.length) {
    list.innerHTML = '<p class="hint">Enter comma-separated context keywords.</p>';
    return;
  }
  if (!state.pairs.length) {
    list.innerHTML = `<p class="hint">No suitable pairs returned ` +
      `(shortfall ${state.shortfall}).</p>`;
    return;
  }

  const cards = state.pairs.map((pair) => {
    const gen = state.current[pair.pair_id];
    const badge = pair.kind === "homographic" ? "hom" : "het";
    let genHtml = `<button class="generate" data-pair="${escapeHtml(pair.pair_id)}">generate</button>`;
    if (gen) {
      const mark = state.marks[gen.generation_id];
      const sent = gen.generation_id in state.sent;
      genHtml = `
        <div class="generation" data-generation="${gen.generation_id}">
          <div class="prompt">${escapeHtml(gen.prompt)}</div>
          <div class="text">${escapeHtml(gen.text)}</div>
          <button class="mark-success${mark === 1 ? " active" : ""}"
                  data-generation="${gen.generation_id}">success</button>
          <button class="mark-fail${mark === 0 ? " active" : ""}"
                  data-generation="${gen.generation_id}">fail</button>
          ${sent ? '<span class="sent">✓ recorded</span>' : ""}
        </div>`;
    }
    return `
      <li class="pair" data-pair="${escapeHtml(pair.pair_id)}">
        <span class="rank">#${pair.rank}</span>
        <span class="words">${escapeHtml(pair.pun_word)} / ${escapeHtml(pair.alt_word)}</span>
        <span class="badge ${badge}">${badge}</span>
        <span class="score">${pair.score.toFixed(3)}</span>
        <div class="gloss">${escapeHtml(pair.pun_gloss)}</div>
        <div class="gloss alt">${escapeHtml(pair.alt_gloss)}</div>
        ${genHtml}
      </li>`;
  });
  list.innerHTML = `<ul class="pair-list">${cards.join("")}</ul>`;
}

export function createController(
  root: HTMLElement,
  client: ApiClient,
  rerender: (state: SessionState) => void = (s) => render(root, s),
): Controller {
  let state = newSession();
  let inflight: AbortController | null = null;
  let timer: ReturnType<typeof setTimeout> | null = null;
  let queued: string[] | null = null;
  let pending: Promise<void> = Promise.resolve();

  function update(next: SessionState): void {
    state = next;
    rerender(state);
  }

  async function doRetrieve(keywords: string[]): Promise<void> {
    if (!keywords.length) {
      update(applyRetrieve(state, [], [], 0));
      return;
    }
    inflight?.abort();
    const controller = new AbortController();
    inflight = controller;
    try {
      const response = await client.retrieve(
        keywords, state.k, "unsupervised", controller.signal);
      if (inflight !== controller) return; // a newer request superseded us
      update(applyRetrieve(state, response.keywords, response.results,
                           response.shortfall));
    } catch (err) {
      if (controller.signal.aborted) return;
      if (err instanceof BackendUnavailableError) {
        update(applyBanner(state, `backend unavailable: ${err.message}`));
      } else {
        update(applyBanner(state, String(err)));
      }
    }
  }

  function schedule(raw: string): void {
    queued = parseKeywords(raw);
    if (timer) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      const keywords = queued;
      queued = null;
      if (keywords) pending = pending.then(() => doRetrieve(keywords));
    }, DEBOUNCE_MS);
  }

  return {
    state: () => state,

    onInput(raw: string): void {
      schedule(raw);
    },

    onKChange(k: number): void {
      update(applyK(state, k));
      if (state.keywords.length) {
        pending = pending.then(() => doRetrieve(state.keywords));
      }
    },

    async generateFor(pairId: string): Promise<void> {
      try {
        const generation = await client.generate(state.keywords, pairId);
        update(applyGeneration(state, pairId, generation));
      } catch (err) {
        if (err instanceof BackendUnavailableError) {
          update(applyBanner(state, `backend unavailable: ${err.message}`));
        } else {
          update(applyBanner(state, String(err)));
        }
      }
    },

    async mark(generationId: string, success: 0 | 1): Promise<void> {
      update(applyMark(state, generationId, success));
      try {
        await client.feedback(generationId, success, state.sessionId);
        update(applySent(state, generationId, success));
      } catch (err) {
        if (err instanceof AlreadyRecordedError) {
          update(applyBanner(state, "already recorded"));
        } else if (err instanceof BackendUnavailableError) {
          update(applyBanner(state, `backend unavailable: ${err.message}`));
        } else {
          update(applyBanner(state, String(err)));
        }
      }
    },

    exportCsv(): string {
      return exportSessionCsv(state);
    },

    async flushPending(): Promise<void> {
      if (timer) {
        clearTimeout(timer);
        timer = null;
      }
      if (queued) {
        const keywords = queued;
        queued = null;
        pending = pending.then(() => doRetrieve(keywords));
      }
      await pending;
    },
  };
}
