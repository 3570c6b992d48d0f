import type {
  BlockedMutation,
  CreateResponse,
  MutateResult,
  QuiverJson,
  SessionState,
} from "./types.js";

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string }
) => Promise<{
  status: number;
  ok: boolean;
  json(): Promise<unknown>;
  text(): Promise<string>;
}>;

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike
  ) {}

  private async request(path: string, method: string, body?: unknown) {
    const res = await this.fetchImpl(this.baseUrl + path, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    return res;
  }

  private async expectJson(res: {
    status: number;
    json(): Promise<unknown>;
    text(): Promise<string>;
  }) {
    if (res.status >= 400) {
      throw new ApiError(res.status, await res.text());
    }
    return res.json();
  }

  async createFromType(type: string): Promise<CreateResponse> {
    const res = await this.request("/sessions", "POST", { type });
    return (await this.expectJson(res)) as CreateResponse;
  }

  async createFromQuiver(quiver: QuiverJson): Promise<CreateResponse> {
    const res = await this.request("/sessions", "POST", { quiver });
    return (await this.expectJson(res)) as CreateResponse;
  }

  async getState(id: string): Promise<SessionState> {
    const res = await this.request(`/sessions/${id}`, "GET");
    return (await this.expectJson(res)) as SessionState;
  }

  async mutate(id: string, vertex: number): Promise<MutateResult> {
    const res = await this.request(`/sessions/${id}/mutate`, "POST", { vertex });
    if (res.status === 409) {
      return { kind: "blocked", detail: (await res.json()) as BlockedMutation };
    }
    return { kind: "ok", state: (await this.expectJson(res)) as SessionState };
  }

  async undo(id: string): Promise<SessionState> {
    const res = await this.request(`/sessions/${id}/undo`, "POST");
    return (await this.expectJson(res)) as SessionState;
  }

  async exportDot(id: string): Promise<string> {
    const res = await this.request(`/sessions/${id}/export?format=dot`, "GET");
    if (res.status >= 400) {
      throw new ApiError(res.status, await res.text());
    }
    return res.text();
  }

  async exportJson(id: string): Promise<SessionState> {
    const res = await this.request(`/sessions/${id}/export?format=json`, "GET");
    return (await this.expectJson(res)) as SessionState;
  }
}
