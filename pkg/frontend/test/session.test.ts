import { describe, expect, it } from "vitest";

import { CuttingSession } from "../src/session.js";
import { ApiState, CutsResponse, DgMark, HttpError, Transport, ViewState } from "../src/types.js";

const API_STATE: ApiState = {
  points: [[0, 0], [1, 0], [2, 0]],
  potential: [3, 1, 2],
  parent: [1, 1, 1],
  edge_length: [1, 0, 1],
};

const DG: DgMark[] = [
  { node: 0, p: 3, w: 1 },
  { node: 2, p: 2, w: 1 },
];

/** Server-faithful fake: node 1 is the root and may not be cut. */
class FakeTransport implements Transport {
  posts: number[][] = [];
  deferred = false;
  private waiters: Array<() => void> = [];

  async getState(): Promise<ApiState> {
    return API_STATE;
  }

  async getDecisionGraph(): Promise<DgMark[]> {
    return DG;
  }

  flush(): void {
    const ws = this.waiters;
    this.waiters = [];
    for (const w of ws) w();
  }

  async postCuts(nodes: number[]): Promise<CutsResponse> {
    this.posts.push([...nodes]);
    if (this.deferred) {
      await new Promise<void>((resolve) => this.waiters.push(resolve));
    }
    if (nodes.includes(1)) {
      throw new HttpError(422, { error: "cannot cut a root", node: 1 });
    }
    const cut = new Set(nodes);
    const ids = [0, 0, 0];
    let k = 1;
    for (const v of [0, 2]) {
      if (cut.has(v)) {
        ids[v] = k;
        k += 1;
      }
    }
    return { k, cluster_id: ids, roots: [1, ...nodes] };
  }
}

function makeSession(transport: Transport) {
  const frames: ViewState[] = [];
  const session = new CuttingSession(transport, (s) => frames.push(s));
  return { session, frames };
}

describe("CuttingSession", () => {
  it("loads state and decision graph", async () => {
    const t = new FakeTransport();
    const { session } = makeSession(t);
    await session.load();
    expect(session.state.points.length).toBe(3);
    expect(session.state.dg.length).toBe(2);
    expect(session.state.k).toBe(1);
    expect(session.state.banner).toBeNull();
  });

  it("hover info flows into the view state", async () => {
    const t = new FakeTransport();
    const { session, frames } = makeSession(t);
    await session.load();
    session.hover(DG[1]);
    expect(session.state.hover).toEqual({ node: 2, p: 2, w: 1 });
    session.hover(null);
    expect(session.state.hover).toBeNull();
    expect(frames.length).toBe(3);
  });

  it("shows a banner when the server is unreachable", async () => {
    const t: Transport = {
      getState: () => Promise.reject(new Error("refused")),
      getDecisionGraph: () => Promise.reject(new Error("refused")),
      postCuts: () => Promise.reject(new Error("refused")),
    };
    const { session } = makeSession(t);
    await session.load();
    expect(session.state.banner).toMatch(/failed to load/);
  });

  it("POSTs exactly the marks inside the brush", async () => {
    const t = new FakeTransport();
    const { session } = makeSession(t);
    await session.load();
    await session.select({ p0: 1.5, p1: 2.5, w0: 0.5, w1: 1.5 });
    expect(t.posts).toEqual([[2]]);
    expect(session.state.k).toBe(2);
    expect(session.state.clusters).toEqual([0, 0, 1]);
  });

  it("empty brush posts an empty cut set", async () => {
    const t = new FakeTransport();
    const { session } = makeSession(t);
    await session.load();
    await session.select({ p0: 9, p1: 10, w0: 9, w1: 10 });
    expect(t.posts).toEqual([[]]);
    expect(session.state.k).toBe(1);
  });

  it("covering brush cuts every mark", async () => {
    const t = new FakeTransport();
    const { session } = makeSession(t);
    await session.load();
    await session.select({ p0: 0, p1: 10, w0: 0, w1: 10 });
    expect(t.posts).toEqual([[0, 2]]);
    expect(session.state.k).toBe(3);
  });

  it("rolls back selection and shows a banner on 422", async () => {
    const t = new FakeTransport();
    const { session } = makeSession(t);
    await session.load();
    await session.select({ p0: 1.5, p1: 2.5, w0: 0.5, w1: 1.5 });
    // Force an invalid request directly (the root is not a DG mark, so a
    // brush can never produce it; simulate a racing/buggy client instead).
    await (session as unknown as { submit(n: number[]): Promise<void> })
      .submit([1]);
    expect(session.state.banner).toMatch(/cut rejected/);
    expect(session.state.selection).toEqual([2]);
    expect(session.state.k).toBe(2);
  });

  it("coalesces brushes while a request is in flight", async () => {
    const t = new FakeTransport();
    const { session } = makeSession(t);
    await session.load();
    t.deferred = true;
    const first = session.select({ p0: 1.5, p1: 2.5, w0: 0.5, w1: 1.5 }); // [2]
    void session.select({ p0: 2.5, p1: 3.5, w0: 0.5, w1: 1.5 }); // [0]
    void session.select({ p0: 0, p1: 10, w0: 0, w1: 10 }); // [0, 2]
    t.flush();
    await first;
    // The intermediate selection never reached the wire.
    expect(t.posts).toEqual([[2], [0, 2]]);
    t.flush();
    await new Promise((resolve) => setTimeout(resolve, 0));
    expect(session.state.k).toBe(3);
  });
});
