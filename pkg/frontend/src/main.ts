/** DOM wiring: render into #app, translate pointer drags into brush rects. */

import { dgScales, renderApp } from "./render.js";
import { CuttingSession } from "./session.js";
import { HttpTransport } from "./transport.js";
import { Rect } from "./types.js";

const root = document.getElementById("app")!;
let brush: Rect | null = null;

const session = new CuttingSession(new HttpTransport(), (state) => {
  root.innerHTML = renderApp(state, brush);
});

function dgPoint(event: PointerEvent): { p: number; w: number } | null {
  const svg = root.querySelector<SVGSVGElement>("svg#dg");
  if (!svg) {
    return null;
  }
  const box = svg.getBoundingClientRect();
  const px = ((event.clientX - box.left) / box.width) * svg.viewBox.baseVal.width;
  const py = ((event.clientY - box.top) / box.height) * svg.viewBox.baseVal.height;
  const { x, y } = dgScales(session.state);
  return { p: x.invert(px), w: y.invert(py) };
}

let anchor: { p: number; w: number } | null = null;

root.addEventListener("pointerdown", (event) => {
  const hit = dgPoint(event as PointerEvent);
  if (!hit) {
    return;
  }
  anchor = hit;
  brush = { p0: hit.p, p1: hit.p, w0: hit.w, w1: hit.w };
  root.innerHTML = renderApp(session.state, brush);
});

let hoverNode: number | null = null;

root.addEventListener("pointermove", (event) => {
  if (anchor) {
    const hit = dgPoint(event as PointerEvent);
    if (hit) {
      brush = { p0: anchor.p, p1: hit.p, w0: anchor.w, w1: hit.w };
      root.innerHTML = renderApp(session.state, brush);
    }
    return;
  }
  const el = (event.target as Element | null)?.closest?.("circle.mark");
  const node = el ? Number(el.getAttribute("data-node")) : null;
  if (node !== hoverNode) {
    hoverNode = node;
    session.hover(session.state.dg.find((m) => m.node === node) ?? null);
  }
});

root.addEventListener("pointerup", () => {
  if (!anchor || !brush) {
    return;
  }
  const rect = brush;
  anchor = null;
  brush = null;
  void session.select(rect);
});

document.addEventListener("keydown", (event) => {
  if (event.key === "Escape") {
    void session.clear();
  }
});

void session.load();
