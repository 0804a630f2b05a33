/** Shared shapes for the cutting UI. */

export interface DgMark {
  node: number;
  p: number;
  w: number;
}

export interface ApiState {
  points: [number, number][];
  potential: number[];
  parent: number[];
  edge_length: number[];
}

export interface CutsResponse {
  k: number;
  cluster_id: number[];
  roots: number[];
}

/** Rectangle in decision-graph data coordinates (p on x, w on y). */
export interface Rect {
  p0: number;
  p1: number;
  w0: number;
  w1: number;
}

export interface ViewState {
  points: [number, number][];
  dg: DgMark[];
  /** Node ids of the currently severed edges (the brush selection). */
  selection: number[];
  clusters: number[];
  k: number;
  banner: string | null;
  hover: DgMark | null;
}

export class HttpError extends Error {
  constructor(readonly status: number, readonly body: unknown) {
    super(`HTTP ${status}`);
  }
}

export interface Transport {
  getState(): Promise<ApiState>;
  getDecisionGraph(): Promise<DgMark[]>;
  postCuts(nodes: number[]): Promise<CutsResponse>;
}
