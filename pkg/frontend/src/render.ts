/** Pure SVG renderers: the whole view is a function of ViewState. */

import { LinearScale, extent } from "./scale.js";
import { Rect, ViewState } from "./types.js";

export const WIDTH = 480;
export const HEIGHT = 400;
export const MARGIN = 32;

/** Same categorical cycle as the pipeline's SVG output. */
export const PALETTE = [
  "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
  "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
];

export function clusterColor(id: number): string {
  return PALETTE[((id % PALETTE.length) + PALETTE.length) % PALETTE.length];
}

function fmt(v: number): string {
  return v.toFixed(2);
}

export interface DgScales {
  x: LinearScale;
  y: LinearScale;
}

/** Pixel scales for the decision-graph view; y runs upward (flipped range). */
export function dgScales(state: ViewState): DgScales {
  const [p0, p1] = extent(state.dg.map((m) => m.p));
  const [w0, w1] = extent(state.dg.map((m) => m.w));
  return {
    x: new LinearScale(p0, p1, MARGIN, WIDTH - MARGIN),
    y: new LinearScale(w0, w1, HEIGHT - MARGIN, MARGIN),
  };
}

export function renderDecisionGraph(state: ViewState, brush: Rect | null): string {
  const { x, y } = dgScales(state);
  const selected = new Set(state.selection);
  const marks = state.dg
    .map((m) => {
      const cls = selected.has(m.node) ? "mark sel" : "mark";
      return `<circle class="${cls}" data-node="${m.node}" cx="${fmt(x.map(m.p))}" cy="${fmt(y.map(m.w))}" r="4"/>`;
    })
    .join("");
  let brushRect = "";
  if (brush) {
    const bx0 = Math.min(x.map(brush.p0), x.map(brush.p1));
    const bx1 = Math.max(x.map(brush.p0), x.map(brush.p1));
    const by0 = Math.min(y.map(brush.w0), y.map(brush.w1));
    const by1 = Math.max(y.map(brush.w0), y.map(brush.w1));
    brushRect = `<rect class="brush" x="${fmt(bx0)}" y="${fmt(by0)}" width="${fmt(bx1 - bx0)}" height="${fmt(by1 - by0)}"/>`;
  }
  return (
    `<svg id="dg" viewBox="0 0 ${WIDTH} ${HEIGHT}">` +
    `<rect class="frame" x="${MARGIN}" y="${MARGIN}" width="${WIDTH - 2 * MARGIN}" height="${HEIGHT - 2 * MARGIN}"/>` +
    `<text class="axis" x="${WIDTH / 2}" y="${HEIGHT - 8}">potential P</text>` +
    `<text class="axis" x="12" y="${HEIGHT / 2}" transform="rotate(-90 12 ${HEIGHT / 2})">edge length W</text>` +
    marks +
    brushRect +
    `</svg>`
  );
}

export function renderDataScatter(state: ViewState): string {
  const [x0, x1] = extent(state.points.map((p) => p[0]));
  const [y0, y1] = extent(state.points.map((p) => p[1]));
  const sx = new LinearScale(x0, x1, MARGIN, WIDTH - MARGIN);
  const sy = new LinearScale(y0, y1, HEIGHT - MARGIN, MARGIN);
  const dots = state.points
    .map(([px, py], i) => {
      const color = clusterColor(state.clusters[i] ?? 0);
      return `<circle cx="${fmt(sx.map(px))}" cy="${fmt(sy.map(py))}" r="3" fill="${color}"/>`;
    })
    .join("");
  return `<svg id="data" viewBox="0 0 ${WIDTH} ${HEIGHT}">${dots}</svg>`;
}

export function renderApp(state: ViewState, brush: Rect | null): string {
  const banner = state.banner
    ? `<div class="banner">${state.banner}</div>`
    : "";
  const hover = state.hover
    ? `node ${state.hover.node} (P=${state.hover.p.toFixed(3)}, W=${state.hover.w.toFixed(3)})`
    : "";
  return (
    banner +
    `<div class="readout">clusters: <b id="k">${state.k}</b>` +
    ` | cuts: ${state.selection.length} | ${hover}</div>` +
    `<div class="panes">` +
    `<div class="pane"><h3>decision graph — brush the pop-outs</h3>${renderDecisionGraph(state, brush)}</div>` +
    `<div class="pane"><h3>data</h3>${renderDataScatter(state)}</div>` +
    `</div>`
  );
}
