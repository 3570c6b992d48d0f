// Explorer application: one active session, click-to-mutate, undo, preset
// loading, JSON import and DOT export. Mutation results are never predicted
// client-side; the view re-renders from each server payload.

import { ApiClient, ApiError } from "./api.js";
import { layoutQuiver, Positions } from "./layout.js";
import type { BlockedMutation, QuiverJson, SessionState } from "./types.js";
import {
  renderCartanGrid,
  renderOverlay,
  renderPanels,
  renderQuiver,
} from "./view.js";

export interface AppElements {
  quiver: HTMLElement;
  cartan: HTMLElement;
  panels: HTMLElement;
  overlay: HTMLElement;
  status: HTMLElement;
}

export class ExplorerApp {
  private sessionId: string | null = null;
  private state: SessionState | null = null;
  private positions: Positions = new Map();
  private pending = false;

  constructor(
    private readonly api: ApiClient,
    private readonly elements: AppElements
  ) {}

  get currentState(): SessionState | null {
    return this.state;
  }

  async loadPreset(type: string): Promise<void> {
    const res = await this.api.createFromType(type);
    this.startSession(res.id, res.state);
  }

  async importQuiver(quiver: QuiverJson): Promise<void> {
    const res = await this.api.createFromQuiver(quiver);
    this.startSession(res.id, res.state);
  }

  private startSession(id: string, state: SessionState): void {
    this.sessionId = id;
    this.state = state;
    this.positions = new Map();
    this.refreshLayout();
    this.render();
    this.setStatus(`session ${id}`);
  }

  private refreshLayout(): void {
    if (!this.state) return;
    const edges = this.state.quiver.arrows.map(
      (a) => [a.src, a.tgt] as [number, number]
    );
    // pinned positions keep successive mutation pictures comparable
    this.positions = layoutQuiver(this.state.quiver.n, edges, this.positions);
  }

  async clickVertex(vertex: number): Promise<void> {
    if (!this.sessionId || this.pending) return;
    this.pending = true;
    try {
      const result = await this.api.mutate(this.sessionId, vertex);
      if (result.kind === "blocked") {
        this.showOverlay(result.detail);
        this.setStatus(`mutation at ${vertex} blocked`);
      } else {
        this.state = result.state;
        this.refreshLayout();
        this.render();
        this.setStatus(`mutated at ${vertex}`);
      }
    } catch (err) {
      this.setStatus(this.describe(err));
    } finally {
      this.pending = false;
    }
  }

  async undo(): Promise<void> {
    if (!this.sessionId || this.pending) return;
    this.pending = true;
    try {
      this.state = await this.api.undo(this.sessionId);
      this.refreshLayout();
      this.render();
      this.setStatus("undone");
    } catch (err) {
      this.setStatus(this.describe(err));
    } finally {
      this.pending = false;
    }
  }

  async exportDot(): Promise<string> {
    if (!this.sessionId) throw new Error("no active session");
    return this.api.exportDot(this.sessionId);
  }

  exportStateJson(): string {
    if (!this.state) throw new Error("no active session");
    return JSON.stringify(this.state, null, 2);
  }

  private showOverlay(blocked: BlockedMutation): void {
    renderOverlay(this.elements.overlay, blocked);
  }

  dismissOverlay(): void {
    renderOverlay(this.elements.overlay, null);
  }

  private render(): void {
    if (!this.state) return;
    this.dismissOverlay();
    renderQuiver(this.elements.quiver, this.state, this.positions, {
      onVertexClick: (v) => void this.clickVertex(v),
    });
    renderCartanGrid(this.elements.cartan, this.state);
    renderPanels(this.elements.panels, this.state);
  }

  private setStatus(text: string): void {
    this.elements.status.textContent = text;
  }

  private describe(err: unknown): string {
    if (err instanceof ApiError) return `server error ${err.status}`;
    return err instanceof Error ? err.message : String(err);
  }
}
