import { ApiState, CutsResponse, DgMark, HttpError, Transport } from "./types.js";

export class HttpTransport implements Transport {
  constructor(private readonly base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const resp = await fetch(this.base + path);
    if (!resp.ok) {
      throw new HttpError(resp.status, await resp.text());
    }
    return (await resp.json()) as T;
  }

  getState(): Promise<ApiState> {
    return this.get<ApiState>("/api/state");
  }

  getDecisionGraph(): Promise<DgMark[]> {
    return this.get<DgMark[]>("/api/decision-graph");
  }

  async postCuts(nodes: number[]): Promise<CutsResponse> {
    const resp = await fetch(this.base + "/api/cuts", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ cut_nodes: nodes }),
    });
    if (!resp.ok) {
      let body: unknown;
      try {
        body = await resp.json();
      } catch {
        body = await resp.text();
      }
      throw new HttpError(resp.status, body);
    }
    return (await resp.json()) as CutsResponse;
  }
}
