// End-to-end explorer flow against the fixture-backed mock API:
// load the A3 preset, click vertex 2, and compare the rendered quiver,
// Cartan grid, and cycle-relation panel with the mutated payload; then the
// blocked-mutation overlay and exact undo restoration.

import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { ExplorerApp } from "../src/app.js";
import { createMockServer, fixtures } from "./mockServer.js";

function mount() {
  document.body.innerHTML = `
    <section id="quiver"></section>
    <section id="cartan"></section>
    <section id="panels"></section>
    <div id="overlay"></div>
    <span id="status"></span>
  `;
  const server = createMockServer();
  const app = new ExplorerApp(new ApiClient("", server.fetch), {
    quiver: document.getElementById("quiver")!,
    cartan: document.getElementById("cartan")!,
    panels: document.getElementById("panels")!,
    overlay: document.getElementById("overlay")!,
    status: document.getElementById("status")!,
  });
  return { app, server };
}

function flush() {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

beforeEach(() => {
  document.body.innerHTML = "";
});

describe("explorer end to end", () => {
  it("loads the A3 preset and renders the seed chain", async () => {
    const { app } = mount();
    await app.loadPreset("A3");
    expect(document.querySelectorAll("g.vertex").length).toBe(3);
    const labels = [...document.querySelectorAll("text.arrow-label")].map(
      (t) => t.textContent
    );
    expect(labels).toEqual(["(-1,-1)", "(-1,-1)"]);
    const cells = [...document.querySelectorAll("td.cartan-cell")].map(
      (td) => td.textContent
    );
    expect(cells).toEqual(["2", "-1", "0", "-1", "2", "-1", "0", "-1", "2"]);
    expect(document.querySelector(".relation-R5")?.textContent).toBe("R5: 0");
  });

  it("click on vertex 2 rerenders quiver, Cartan grid, and cycle relations", async () => {
    const { app } = mount();
    await app.loadPreset("A3");
    document.querySelector('g.vertex[data-vertex="2"]')!.dispatchEvent(
      new MouseEvent("click", { bubbles: true })
    );
    await flush();

    // quiver panel: the oriented triangle with one positive arrow
    const labels = [...document.querySelectorAll("text.arrow-label")]
      .map((t) => t.textContent)
      .sort();
    expect(labels).toEqual(["(-1,-1)", "(-1,-1)", "(1,1)"]);
    expect(document.querySelectorAll("line.arrow.positive").length).toBe(1);

    // Cartan grid equals the mutated counterpart entry for entry
    const cells = [...document.querySelectorAll("td.cartan-cell")].map(
      (td) => td.textContent
    );
    expect(cells).toEqual(
      fixtures.a3AfterMut2.cartan.flat().map((x) => String(x))
    );
    expect(cells).toEqual(["2", "-1", "-1", "-1", "2", "1", "-1", "1", "2"]);

    // cycle-relation panel: twelve sign-chained relations
    expect(document.querySelector(".relation-R5")?.textContent).toBe("R5: 12");
    expect(document.querySelector(".root-count")?.textContent).toBe("roots: 12");
    expect(document.querySelector(".history-breadcrumb")?.textContent).toBe(
      "history: μ2"
    );
  });

  it("shows the blocked-mutation overlay for the all-negative triangle", async () => {
    const { app } = mount();
    await app.importQuiver(fixtures.cycleInitial.quiver);
    expect(document.querySelector(".dynkin-badge")?.textContent).toBe(
      "not mutation Dynkin"
    );
    document.querySelector('g.vertex[data-vertex="2"]')!.dispatchEvent(
      new MouseEvent("click", { bubbles: true })
    );
    await flush();
    const overlay = document.getElementById("overlay")!;
    expect(overlay.classList.contains("visible")).toBe(true);
    expect(overlay.querySelector(".matrix-preview")).not.toBeNull();
    expect(overlay.textContent).toContain("Mutation blocked");
    // the session itself is untouched
    expect(document.querySelector(".history-breadcrumb")?.textContent).toBe(
      "history: (seed)"
    );
  });

  it("undo restores the previous rendering exactly", async () => {
    const { app } = mount();
    await app.loadPreset("A3");
    const snapshot = () =>
      ["quiver", "cartan", "panels"]
        .map((id) => document.getElementById(id)!.innerHTML)
        .join("\n");
    const before = snapshot();
    await app.clickVertex(2);
    expect(snapshot()).not.toBe(before);
    await app.undo();
    expect(snapshot()).toBe(before);
    expect(app.currentState?.history).toEqual([]);
  });

  it("never computes mathematics locally: rendered numbers come from payloads", async () => {
    const { app, server } = mount();
    await app.loadPreset("A3");
    await app.clickVertex(2);
    const payloads = [fixtures.a3Initial, fixtures.a3AfterMut2];
    const allowed = new Set<string>();
    for (const payload of payloads) {
      payload.cartan.flat().forEach((x) => allowed.add(String(x)));
      payload.quiver.arrows.forEach((a) => {
        allowed.add(`(${a.v[0]},${a.v[1]})`);
      });
    }
    const cells = [...document.querySelectorAll("td.cartan-cell")].map(
      (td) => td.textContent ?? ""
    );
    const labels = [...document.querySelectorAll("text.arrow-label")].map(
      (t) => t.textContent ?? ""
    );
    for (const shown of [...cells, ...labels]) {
      expect(allowed.has(shown)).toBe(true);
    }
    // exactly one network round trip per user action: create + mutate
    expect(server.calls.map((c) => c.method)).toEqual(["POST", "POST"]);
  });

  it("exports DOT through the session endpoint", async () => {
    const { app, server } = mount();
    await app.loadPreset("A3");
    await app.exportDot();
    const last = server.calls[server.calls.length - 1]!;
    expect(last.url).toContain("/export?format=dot");
  });
});
