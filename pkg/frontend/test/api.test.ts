import { afterEach, describe, expect, it, vi } from "vitest";

import {
  AlreadyRecordedError,
  ApiClient,
  BackendUnavailableError,
} from "../src/api.js";

function mockFetch(status: number, body: unknown) {
  return vi.fn(async () => new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  }));
}

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient", () => {
  it("retrieve posts the wire payload and returns results", async () => {
    const fetchMock = mockFetch(200, {
      keywords: ["whale"],
      method: "unsupervised",
      results: [],
      shortfall: 1,
    });
    vi.stubGlobal("fetch", fetchMock);
    const response = await new ApiClient("http://x").retrieve(["whale"], 1);
    expect(response.shortfall).toBe(1);
    const [url, init] = fetchMock.mock.calls[0] as [string, RequestInit];
    expect(url).toBe("http://x/retrieve");
    expect(JSON.parse(init.body as string)).toEqual({
      keywords: ["whale"], k: 1, method: "unsupervised",
    });
  });

  it("503 surfaces as BackendUnavailableError with the backend name", async () => {
    vi.stubGlobal("fetch",
                  mockFetch(503, { error: "classifier backend not configured" }));
    await expect(new ApiClient().retrieve(["whale"], 1, "classifier"))
      .rejects.toThrow(BackendUnavailableError);
    vi.stubGlobal("fetch",
                  mockFetch(503, { error: "classifier backend not configured" }));
    await expect(new ApiClient().retrieve(["whale"], 1, "classifier"))
      .rejects.toThrow(/classifier/);
  });

  it("409 on feedback surfaces as AlreadyRecordedError", async () => {
    vi.stubGlobal("fetch", mockFetch(409, { error: "feedback already recorded" }));
    await expect(new ApiClient().feedback("g1", 1, "sess"))
      .rejects.toThrow(AlreadyRecordedError);
  });

  it("generate unwraps the generation object", async () => {
    vi.stubGlobal("fetch", mockFetch(200, {
      generation: { generation_id: "g9", text: "whale fluke" },
    }));
    const gen = await new ApiClient().generate(["whale"], "fluke/fluke");
    expect(gen.generation_id).toBe("g9");
  });

  it("400 errors carry the server error detail", async () => {
    vi.stubGlobal("fetch", mockFetch(400, { error: "bad body", field: "k" }));
    await expect(new ApiClient().retrieve(["whale"], 1))
      .rejects.toThrow(/bad body/);
  });
});
