/** Thin typed client for the /api/v1 game protocol. */

import type {
  CreateRequest,
  CreateResponse,
  ErrorBody,
  GameStateJson,
  Pair,
} from "./types.js";

export class ApiError extends Error {
  readonly code: ErrorBody["error"];
  readonly status: number;

  constructor(status: number, body: ErrorBody) {
    super(body.detail);
    this.code = body.error;
    this.status = status;
  }
}

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (...args) => globalThis.fetch(...args),
  ) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}/api/v1${path}`, {
      method,
      headers: body === undefined ? {} : { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (response.status === 204) return undefined as T;
    const payload = await response.json();
    if (!response.ok) throw new ApiError(response.status, payload as ErrorBody);
    return payload as T;
  }

  createGame(request: CreateRequest): Promise<CreateResponse> {
    return this.request("POST", "/games", request);
  }

  getState(id: string): Promise<GameStateJson> {
    return this.request("GET", `/games/${id}`);
  }

  submitMove(id: string, diagonals: Pair[]): Promise<GameStateJson> {
    return this.request("POST", `/games/${id}/moves`, { diagonals });
  }

  async hint(id: string): Promise<Pair[]> {
    const body = await this.request<{ diagonals: Pair[] }>("GET", `/games/${id}/hint`);
    return body.diagonals;
  }

  deleteGame(id: string): Promise<void> {
    return this.request("DELETE", `/games/${id}`);
  }
}
