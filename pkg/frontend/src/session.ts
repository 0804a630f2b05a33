/** Headless UI core: state transitions, selection, and coalesced POSTs.
 *
 * The server is the single source of truth for clustering; this class only
 * forwards brush selections and mirrors the responses.  At most one cuts
 * request is in flight; newer selections replace any queued one.
 */

import { marksInRect } from "./select.js";
import { DgMark, HttpError, Rect, Transport, ViewState } from "./types.js";

export class CuttingSession {
  state: ViewState = {
    points: [],
    dg: [],
    selection: [],
    clusters: [],
    k: 1,
    banner: null,
    hover: null,
  };

  private inflight: Promise<void> | null = null;
  private queued: number[] | null = null;
  private committed: { selection: number[]; clusters: number[]; k: number } = {
    selection: [],
    clusters: [],
    k: 1,
  };

  constructor(
    private readonly transport: Transport,
    private readonly present: (state: ViewState) => void,
  ) {}

  private show(): void {
    this.present(this.state);
  }

  async load(): Promise<void> {
    try {
      const [api, dg] = await Promise.all([
        this.transport.getState(),
        this.transport.getDecisionGraph(),
      ]);
      this.state = {
        points: api.points,
        dg,
        selection: [],
        clusters: api.points.map(() => 0),
        k: 1,
        banner: null,
        hover: null,
      };
      this.committed = { selection: [], clusters: this.state.clusters, k: 1 };
    } catch (err) {
      this.state = { ...this.state, banner: `failed to load: ${err}` };
    }
    this.show();
  }

  hover(mark: DgMark | null): void {
    this.state = { ...this.state, hover: mark };
    this.show();
  }

  /** Brush gesture finished: cut exactly the marks inside the rectangle. */
  select(rect: Rect): Promise<void> {
    return this.submit(marksInRect(this.state.dg, rect));
  }

  clear(): Promise<void> {
    return this.submit([]);
  }

  private submit(nodes: number[]): Promise<void> {
    this.state = { ...this.state, selection: nodes, banner: null };
    this.show();
    if (this.inflight) {
      this.queued = nodes;
      return this.inflight;
    }
    this.inflight = this.post(nodes);
    return this.inflight;
  }

  private async post(nodes: number[]): Promise<void> {
    try {
      const res = await this.transport.postCuts(nodes);
      this.committed = {
        selection: nodes,
        clusters: res.cluster_id,
        k: res.k,
      };
      this.state = {
        ...this.state,
        clusters: res.cluster_id,
        k: res.k,
        banner: null,
      };
    } catch (err) {
      // Roll back to the last accepted cut set.
      const detail =
        err instanceof HttpError ? JSON.stringify(err.body) : String(err);
      this.state = {
        ...this.state,
        selection: this.committed.selection,
        clusters: this.committed.clusters,
        k: this.committed.k,
        banner: `cut rejected: ${detail}`,
      };
    }
    this.show();
    this.inflight = null;
    const next = this.queued;
    this.queued = null;
    // Launch the newest queued selection unless it matches what the server
    // already holds; earlier queued selections were coalesced away.
    if (
      next !== null &&
      (next.length !== this.committed.selection.length ||
        next.some((v, i) => v !== this.committed.selection[i]))
    ) {
      this.inflight = this.post(next);
    }
  }
}
