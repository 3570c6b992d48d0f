// DOM rendering of a session state. Every number shown here is read off
// the server payload; the client performs no mutation arithmetic.

import { LAYOUT_SIZE, Positions } from "./layout.js";
import type { BlockedMutation, SessionState } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface ViewCallbacks {
  onVertexClick: (vertex: number) => void;
}

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderQuiver(
  container: HTMLElement,
  state: SessionState,
  positions: Positions,
  callbacks: ViewCallbacks
): void {
  container.textContent = "";
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${LAYOUT_SIZE.width} ${LAYOUT_SIZE.height}`);
  svg.setAttribute("class", "quiver-canvas");

  for (const arrow of state.quiver.arrows) {
    const from = positions.get(arrow.src);
    const to = positions.get(arrow.tgt);
    if (!from || !to) continue;
    const dx = to.x - from.x;
    const dy = to.y - from.y;
    const len = Math.max(Math.hypot(dx, dy), 1);
    const trim = 22;
    const x1 = from.x + (trim * dx) / len;
    const y1 = from.y + (trim * dy) / len;
    const x2 = to.x - (trim * dx) / len;
    const y2 = to.y - (trim * dy) / len;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(x1));
    line.setAttribute("y1", String(y1));
    line.setAttribute("x2", String(x2));
    line.setAttribute("y2", String(y2));
    const sign = arrow.v[0] < 0 ? "negative" : "positive";
    line.setAttribute("class", `arrow ${sign}`);
    // negative arrows solid, positive dashed, matching the DOT export
    if (sign === "positive") line.setAttribute("stroke-dasharray", "6 4");
    line.setAttribute("marker-end", "url(#arrowhead)");
    svg.appendChild(line);
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String((x1 + x2) / 2 + 6));
    label.setAttribute("y", String((y1 + y2) / 2 - 6));
    label.setAttribute("class", "arrow-label");
    label.textContent = `(${arrow.v[0]},${arrow.v[1]})`;
    svg.appendChild(label);
  }

  const defs = document.createElementNS(SVG_NS, "defs");
  const marker = document.createElementNS(SVG_NS, "marker");
  marker.setAttribute("id", "arrowhead");
  marker.setAttribute("markerWidth", "8");
  marker.setAttribute("markerHeight", "8");
  marker.setAttribute("refX", "6");
  marker.setAttribute("refY", "3");
  marker.setAttribute("orient", "auto");
  const tip = document.createElementNS(SVG_NS, "path");
  tip.setAttribute("d", "M0,0 L6,3 L0,6 z");
  marker.appendChild(tip);
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (let v = 1; v <= state.quiver.n; v++) {
    const p = positions.get(v);
    if (!p) continue;
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "vertex");
    group.setAttribute("data-vertex", String(v));
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(p.x));
    circle.setAttribute("cy", String(p.y));
    circle.setAttribute("r", "16");
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(p.x));
    text.setAttribute("y", String(p.y + 4));
    text.setAttribute("text-anchor", "middle");
    text.textContent = String(v);
    group.appendChild(circle);
    group.appendChild(text);
    group.addEventListener("click", () => callbacks.onVertexClick(v));
    svg.appendChild(group);
  }
  container.appendChild(svg);

  const legend = el("div", "legend");
  legend.append(
    el("span", "legend-negative", "solid = negative arrow"),
    el("span", "legend-positive", "dashed = positive arrow")
  );
  container.appendChild(legend);
}

export function renderCartanGrid(container: HTMLElement, state: SessionState): void {
  container.textContent = "";
  container.appendChild(el("h3", undefined, "Cartan counterpart"));
  const table = el("table", "cartan-grid") as HTMLTableElement;
  for (const row of state.cartan) {
    const tr = el("tr");
    for (const value of row) {
      tr.appendChild(el("td", "cartan-cell", String(value)));
    }
    table.appendChild(tr);
  }
  container.appendChild(table);
}

export function renderPanels(container: HTMLElement, state: SessionState): void {
  container.textContent = "";

  const badge = el("div", "dynkin-badge");
  badge.textContent = state.dynkin ?? "not mutation Dynkin";
  badge.dataset.dynkin = state.dynkin ?? "";
  container.appendChild(badge);

  const roots = el("div", "root-count");
  roots.textContent =
    state.root_count === null ? "roots: n/a" : `roots: ${state.root_count}`;
  container.appendChild(roots);

  const relations = el("div", "relation-summary");
  relations.appendChild(el("h3", undefined, "Relations"));
  const list = el("ul");
  for (const key of ["R1", "R2", "R3", "R4", "R5"] as const) {
    const item = el("li", `relation-${key}`, `${key}: ${state.relation_summary[key]}`);
    list.appendChild(item);
  }
  list.appendChild(el("li", "relation-total", `total: ${state.relation_summary.total}`));
  relations.appendChild(list);
  container.appendChild(relations);

  const danger = el("div", "dangerous-cycles");
  danger.textContent = state.dangerous_cycles.length
    ? `dangerous cycles: ${state.dangerous_cycles
        .map((c) => `(${c.join(",")})`)
        .join(" ")}`
    : "dangerous cycles: none";
  container.appendChild(danger);

  const companion = el("div", "companion-basis");
  companion.appendChild(el("h3", undefined, "Companion basis"));
  if (state.companion_basis === null) {
    companion.appendChild(el("p", undefined, "n/a"));
  } else {
    const table = el("table");
    state.companion_basis.forEach((coords, idx) => {
      const tr = el("tr");
      tr.appendChild(el("th", undefined, `γ${idx + 1}`));
      tr.appendChild(el("td", "companion-coords", `[${coords.join(", ")}]`));
      table.appendChild(tr);
    });
    companion.appendChild(table);
  }
  container.appendChild(companion);

  const crumbs = el("div", "history-breadcrumb");
  crumbs.textContent = state.history.length
    ? `history: ${state.history.map((k) => `μ${k}`).join(" → ")}`
    : "history: (seed)";
  container.appendChild(crumbs);
}

export function renderOverlay(
  container: HTMLElement,
  blocked: BlockedMutation | null
): void {
  container.textContent = "";
  if (!blocked) {
    container.classList.remove("visible");
    return;
  }
  container.classList.add("visible");
  const box = el("div", "overlay-box");
  box.appendChild(el("h3", undefined, "Mutation blocked"));
  const [i, j, k] = blocked.triple;
  box.appendChild(
    el(
      "p",
      "overlay-triple",
      `The sign product over ${i} → ${k} → ${j} and the arrow between ` +
        `${i} and ${j} is negative; the matrix mutation leaves the pure class.`
    )
  );
  box.appendChild(el("h4", undefined, "Matrix preview (not pure)"));
  const table = el("table", "matrix-preview");
  for (const row of blocked.matrix_preview.entries) {
    const tr = el("tr");
    for (const cell of row) {
      tr.appendChild(el("td", undefined, renderTElem(cell)));
    }
    table.appendChild(tr);
  }
  box.appendChild(table);
  const close = el("button", "overlay-close", "dismiss");
  close.addEventListener("click", () => renderOverlay(container, null));
  box.appendChild(close);
  container.appendChild(box);
}

export function renderTElem(cell: { a: number; b: number }): string {
  const { a, b } = cell;
  if (a === 0 && b === 0) return "0";
  if (b === 0) return String(a);
  const t = b === 1 ? "t" : b === -1 ? "-t" : `${b}t`;
  if (a === 0) return t;
  return b > 0 ? `${a}+${t}` : `${a}${t}`;
}
