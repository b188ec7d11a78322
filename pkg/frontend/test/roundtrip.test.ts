// @vitest-environment jsdom
//
// Live round-trip against a locally spawned service: retrieve renders a
// ranked list within the 2-second budget, a success mark lands in the
// feedback log, and the exported session sheet re-imports through the
// evaluation CLI with the same success rate the marks imply.
import { execFile, spawn, type ChildProcess } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, resolve } from "node:path";
import { promisify } from "node:util";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import {
  applyGeneration,
  applyMark,
  applyRetrieve,
  applySent,
  exportSessionCsv,
  newSession,
  type SessionState,
} from "../src/state.js";
import { render } from "../src/ui.js";

const execFileAsync = promisify(execFile);

const REPO = resolve(__dirname, "..", "..");
const PORT = 8900 + Math.floor(Math.random() * 500);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
let workDir: string;

async function waitForHealth(timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/health`);
      if (response.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 250));
  }
  throw new Error("service did not become healthy in time");
}

beforeAll(async () => {
  workDir = mkdtempSync(join(tmpdir(), "punkit-ui-"));
  const config = [
    "[paths]",
    `records = ${REPO}/data/compat_records.tsv`,
    `pair_lexicon = ${REPO}/data/pair_lexicon.tsv`,
    `embeddings = ${REPO}/data/embeddings_300d.txt`,
    `pos_lexicon = ${REPO}/data/pos_lexicon.tsv`,
    `feedback_log = ${workDir}/feedback_log.csv`,
    "[backends]",
    "generator = stub:template",
    "[server]",
    "host = 127.0.0.1",
    `port = ${PORT}`,
    "",
  ].join("\n");
  const configPath = join(workDir, "config.ini");
  writeFileSync(configPath, config);
  server = spawn("punkit", ["--config", configPath, "serve"], {
    cwd: REPO,
    stdio: "ignore",
  });
  await waitForHealth();
}, 45_000);

afterAll(() => {
  server?.kill();
});

describe("live round-trip", () => {
  it("renders a ranked list for 'hunts, deer' within 2 seconds", async () => {
    document.body.innerHTML =
      '<div id="app"><div id="banner" hidden></div><div id="pairs"></div></div>';
    const app = document.getElementById("app")!;
    const client = new ApiClient(BASE);

    const started = Date.now();
    const response = await client.retrieve(["hunts", "deer"], 5);
    let state = newSession("ui-roundtrip");
    state = applyRetrieve(state, response.keywords, response.results,
                          response.shortfall);
    render(app, state);
    const elapsed = Date.now() - started;

    expect(elapsed).toBeLessThan(2000);
    const items = app.querySelectorAll("li.pair");
    expect(items.length).toBe(5);
    expect(items[0].querySelector(".gloss")).toBeTruthy();
    expect(items[0].querySelector(".badge")).toBeTruthy();
  }, 10_000);

  it("mark + export re-imports with an identical success rate", async () => {
    const client = new ApiClient(BASE);
    let state: SessionState = newSession("ui-roundtrip");

    const response = await client.retrieve(["hunts", "deer"], 2);
    state = applyRetrieve(state, response.keywords, response.results,
                          response.shortfall);

    for (const pair of state.pairs) {
      const generation = await client.generate(state.keywords, pair.pair_id);
      state = applyGeneration(state, pair.pair_id, generation);
    }
    const [genA, genB] = Object.values(state.current);
    state = applyMark(state, genA.generation_id, 1);
    await client.feedback(genA.generation_id, 1, state.sessionId);
    state = applySent(state, genA.generation_id, 1);
    state = applyMark(state, genB.generation_id, 0);
    await client.feedback(genB.generation_id, 0, state.sessionId);
    state = applySent(state, genB.generation_id, 0);

    // Expected rate from the raw marks (computed here in the test, not in
    // the UI): 1 success of 2 marked generations.
    const marks = Object.values(state.marks);
    const expectedRate =
      (100 * marks.filter((m) => m === 1).length) / marks.length;

    const sheetPath = join(workDir, "session.csv");
    writeFileSync(sheetPath, exportSessionCsv(state));
    const { stdout } = await execFileAsync(
      "punkit", ["evaluate", "success", "--sheet", sheetPath], { cwd: REPO });
    const line = stdout.split("\n").find((l) => l.startsWith("success:"));
    expect(line).toBeDefined();
    const reported = parseFloat(line!.split(":")[1]);
    expect(reported).toBeCloseTo(expectedRate, 5);

    // The server's own feedback log reports the same rate.
    const logResult = await execFileAsync(
      "punkit",
      ["evaluate", "success", "--sheet", join(workDir, "feedback_log.csv")],
      { cwd: REPO });
    const logLine = logResult.stdout.split("\n")
      .find((l) => l.startsWith("success:"));
    expect(parseFloat(logLine!.split(":")[1])).toBeCloseTo(expectedRate, 5);
  }, 20_000);

  it("duplicate feedback from the same session is rejected with 409", async () => {
    const client = new ApiClient(BASE);
    const response = await client.retrieve(["whale"], 1);
    const generation = await client.generate(["whale"],
                                             response.results[0].pair_id);
    await client.feedback(generation.generation_id, 1, "dup-session");
    await expect(client.feedback(generation.generation_id, 1, "dup-session"))
      .rejects.toThrow(/already recorded/);
  }, 10_000);
});
