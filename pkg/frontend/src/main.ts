import { ApiClient } from "./api.js";
import { ExplorerApp } from "./app.js";

const PRESETS = ["A2", "A3", "A4", "B3", "C3", "D4", "F4", "G2", "B4", "E6"];

function need(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

export function bootstrap(baseUrl = ""): ExplorerApp {
  const api = new ApiClient(baseUrl, (input, init) => fetch(input, init));
  const app = new ExplorerApp(api, {
    quiver: need("quiver"),
    cartan: need("cartan"),
    panels: need("panels"),
    overlay: need("overlay"),
    status: need("status"),
  });

  const select = need("preset") as HTMLSelectElement;
  for (const preset of PRESETS) {
    const opt = document.createElement("option");
    opt.value = preset;
    opt.textContent = preset;
    select.appendChild(opt);
  }
  select.value = "A3";
  need("load").addEventListener("click", () => void app.loadPreset(select.value));
  need("undo").addEventListener("click", () => void app.undo());
  need("export-json").addEventListener("click", () => {
    const blob = new Blob([app.exportStateJson()], { type: "application/json" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "session.json";
    a.click();
  });
  need("export-dot").addEventListener("click", () => {
    void app.exportDot().then((dot) => {
      const blob = new Blob([dot], { type: "text/vnd.graphviz" });
      const a = document.createElement("a");
      a.href = URL.createObjectURL(blob);
      a.download = "quiver.dot";
      a.click();
    });
  });
  need("import").addEventListener("click", () => {
    const text = window.prompt("quiver JSON");
    if (!text) return;
    try {
      void app.importQuiver(JSON.parse(text));
    } catch (err) {
      need("status").textContent = `invalid JSON: ${String(err)}`;
    }
  });

  void app.loadPreset("A3");
  return app;
}

declare global {
  interface Window {
    mutalgExplorer?: ExplorerApp;
  }
}

if (typeof document !== "undefined" && document.getElementById("quiver")) {
  window.mutalgExplorer = bootstrap();
}
