import { describe, expect, it } from "vitest";

import { LinearScale, extent } from "../src/scale.js";

describe("LinearScale", () => {
  it("maps endpoints to the range", () => {
    const s = new LinearScale(0, 10, 100, 200);
    expect(s.map(0)).toBe(100);
    expect(s.map(10)).toBe(200);
    expect(s.map(5)).toBe(150);
  });

  it("is strictly monotone over random values", () => {
    const s = new LinearScale(-3, 7, 0, 480);
    let prev = -Infinity;
    for (let v = -3; v <= 7; v += 0.37) {
      const px = s.map(v);
      expect(px).toBeGreaterThan(prev);
      prev = px;
    }
  });

  it("a flipped range is strictly decreasing (screen y)", () => {
    const s = new LinearScale(0, 1, 400, 32);
    expect(s.map(0.2)).toBeGreaterThan(s.map(0.8));
  });

  it("invert undoes map", () => {
    const s = new LinearScale(2, 9, 32, 448);
    for (const v of [2, 3.7, 8.1, 9]) {
      expect(s.invert(s.map(v))).toBeCloseTo(v, 10);
    }
  });

  it("degenerate domain maps to the range midpoint", () => {
    const s = new LinearScale(5, 5, 0, 100);
    expect(s.map(5)).toBe(50);
    expect(s.map(99)).toBe(50);
  });
});

describe("extent", () => {
  it("finds min and max", () => {
    expect(extent([3, -1, 7, 2])).toEqual([-1, 7]);
  });
  it("defaults on empty input", () => {
    expect(extent([])).toEqual([0, 1]);
  });
});
