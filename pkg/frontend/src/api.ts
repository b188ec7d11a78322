/** Typed client for the pun service HTTP API. */

export interface RetrievedPair {
  pair_id: string;
  pun_word: string;
  alt_word: string;
  pun_gloss: string;
  alt_gloss: string;
  kind: "heterographic" | "homographic";
  score: number;
  rank: number;
}

export interface RetrieveResponse {
  keywords: string[];
  method: string;
  results: RetrievedPair[];
  shortfall: number;
}

export interface Generation {
  generation_id: string;
  keywords: string[];
  pun_word: string;
  alt_word: string;
  pun_gloss: string;
  alt_gloss: string;
  prompt: string;
  text: string;
  backend_id: string;
}

export class BackendUnavailableError extends Error {
  constructor(detail: string) {
    super(detail);
    this.name = "BackendUnavailableError";
  }
}

export class AlreadyRecordedError extends Error {
  constructor() {
    super("already recorded");
    this.name = "AlreadyRecordedError";
  }
}

async function errorDetail(response: Response): Promise<string> {
  try {
    const body = await response.json();
    return body.error ?? response.statusText;
  } catch {
    return response.statusText;
  }
}

async function postJson(
  base: string,
  path: string,
  payload: unknown,
  signal?: AbortSignal,
): Promise<Response> {
  const response = await fetch(base + path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(payload),
    signal,
  });
  if (response.status === 503) {
    throw new BackendUnavailableError(await errorDetail(response));
  }
  return response;
}

export class ApiClient {
  constructor(private readonly base: string = "") {}

  async health(): Promise<{ status: string; pairs: number }> {
    const response = await fetch(this.base + "/health");
    if (!response.ok) throw new Error(`health check failed: ${response.status}`);
    return response.json();
  }

  async retrieve(
    keywords: string[],
    k: number,
    method = "unsupervised",
    signal?: AbortSignal,
  ): Promise<RetrieveResponse> {
    const response = await postJson(
      this.base, "/retrieve", { keywords, k, method }, signal);
    if (!response.ok) throw new Error(await errorDetail(response));
    return response.json();
  }

  async generate(keywords: string[], pairId: string): Promise<Generation> {
    const response = await postJson(this.base, "/generate", {
      keywords,
      pair_id: pairId,
    });
    if (!response.ok) throw new Error(await errorDetail(response));
    const body = await response.json();
    return body.generation as Generation;
  }

  async feedback(
    generationId: string,
    success: 0 | 1,
    judgeId: string,
  ): Promise<void> {
    const response = await postJson(this.base, "/feedback", {
      generation_id: generationId,
      success,
      judge_id: judgeId,
    });
    if (response.status === 409) throw new AlreadyRecordedError();
    if (!response.ok) throw new Error(await errorDetail(response));
  }
}
