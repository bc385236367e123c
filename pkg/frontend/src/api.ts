import type {
  AnalyzeResponse,
  CreateSessionRequest,
  MoveRequest,
  SessionResponse,
  Variant,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: unknown,
  ) {
    super(typeof detail === "string" ? detail : JSON.stringify(detail));
    this.name = "ApiError";
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class GameClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async createSession(request: CreateSessionRequest): Promise<SessionResponse> {
    return this.request("POST", "/sessions", request);
  }

  async getSession(id: string): Promise<SessionResponse> {
    return this.request("GET", `/sessions/${encodeURIComponent(id)}`);
  }

  async playMove(id: string, move: MoveRequest): Promise<SessionResponse> {
    return this.request("POST", `/sessions/${encodeURIComponent(id)}/moves`, move);
  }

  async analyze(
    variant: Variant | string,
    a: number,
    b: number,
    oracle = false,
  ): Promise<AnalyzeResponse> {
    const query = new URLSearchParams({ variant, a: String(a), b: String(b) });
    if (oracle) query.set("oracle", "true");
    return this.request("GET", `/analyze?${query}`);
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const response = await this.fetchImpl(this.baseUrl + path, init);
    const payload = await response.json().catch(() => null);
    if (!response.ok) {
      const detail =
        payload && typeof payload === "object" && "detail" in payload
          ? (payload as { detail: unknown }).detail
          : payload;
      throw new ApiError(response.status, detail);
    }
    return payload as T;
  }
}
