/** Bootstrap: wire DOM events to the controller. */

import { ApiClient } from "./api.js";
import { createController } from "./ui.js";

function download(filename: string, content: string): void {
  const blob = new Blob([content], { type: "text/csv" });
  const url = URL.createObjectURL(blob);
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.download = filename;
  anchor.click();
  URL.revokeObjectURL(url);
}

function bootstrap(): void {
  const root = document.getElementById("app");
  if (!root) throw new Error("missing #app root");
  const client = new ApiClient("");
  const controller = createController(root, client);

  const input = root.querySelector<HTMLInputElement>("#keywords");
  input?.addEventListener("input", () => controller.onInput(input.value));

  const slider = root.querySelector<HTMLInputElement>("#k");
  const kLabel = root.querySelector<HTMLElement>("#k-label");
  slider?.addEventListener("input", () => {
    const k = parseInt(slider.value, 10);
    if (kLabel) kLabel.textContent = String(k);
    controller.onKChange(k);
  });

  root.querySelector("#export")?.addEventListener("click", () => {
    download("session_judgments.csv", controller.exportCsv());
  });

  // Event delegation: pair cards re-render wholesale.
  root.addEventListener("click", (event) => {
    const target = event.target as HTMLElement;
    if (target.matches("button.generate")) {
      const pairId = target.dataset.pair;
      if (pairId) void controller.generateFor(pairId);
    } else if (target.matches("button.mark-success")) {
      const id = target.dataset.generation;
      if (id) void controller.mark(id, 1);
    } else if (target.matches("button.mark-fail")) {
      const id = target.dataset.generation;
      if (id) void controller.mark(id, 0);
    }
  });

  client.health().then(
    (body) => {
      const status = root.querySelector<HTMLElement>("#status");
      if (status) status.textContent = `${body.pairs} pairs loaded`;
    },
    () => {
      const status = root.querySelector<HTMLElement>("#status");
      if (status) status.textContent = "service unreachable";
    },
  );
}

document.addEventListener("DOMContentLoaded", bootstrap);
