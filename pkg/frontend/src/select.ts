import { DgMark, Rect } from "./types.js";

/** Normalize a rectangle so p0 <= p1 and w0 <= w1. */
export function normalizeRect(rect: Rect): Rect {
  return {
    p0: Math.min(rect.p0, rect.p1),
    p1: Math.max(rect.p0, rect.p1),
    w0: Math.min(rect.w0, rect.w1),
    w1: Math.max(rect.w0, rect.w1),
  };
}

/** Node ids of the marks geometrically inside the (closed) rectangle. */
export function marksInRect(marks: DgMark[], rect: Rect): number[] {
  const r = normalizeRect(rect);
  return marks
    .filter((m) => m.p >= r.p0 && m.p <= r.p1 && m.w >= r.w0 && m.w <= r.w1)
    .map((m) => m.node);
}
