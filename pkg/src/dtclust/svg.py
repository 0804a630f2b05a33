"""Deterministic SVG figures: tessellation, in-tree, clusters, decision graph.

Rendering is a pure function of its inputs with fixed color tables and
fixed-precision coordinate formatting, so identical inputs produce
byte-identical documents (used for golden tests).
"""

from __future__ import annotations

import numpy as np

# Sequential map for potential values (dark low to bright high).
SEQUENTIAL_STOPS = (
    "#440154", "#46327e", "#365c8d", "#277f8e",
    "#1fa187", "#4ac16d", "#a0da39", "#fde725",
)

# Categorical cycle for cluster ids.
CATEGORICAL = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
)

WIDTH = 640
HEIGHT = 480
MARGIN = 24
POINT_RADIUS = 3.0


def _hex_to_rgb(h):
    return int(h[1:3], 16), int(h[3:5], 16), int(h[5:7], 16)


def sequential_color(value):
    """Map value in [0, 1] onto the sequential stops by linear interpolation."""
    v = min(max(float(value), 0.0), 1.0)
    pos = v * (len(SEQUENTIAL_STOPS) - 1)
    lo = int(pos)
    hi = min(lo + 1, len(SEQUENTIAL_STOPS) - 1)
    t = pos - lo
    r0, g0, b0 = _hex_to_rgb(SEQUENTIAL_STOPS[lo])
    r1, g1, b1 = _hex_to_rgb(SEQUENTIAL_STOPS[hi])
    return "#{:02x}{:02x}{:02x}".format(round(r0 + t * (r1 - r0)),
                                        round(g0 + t * (g1 - g0)),
                                        round(b0 + t * (b1 - b0)))


def categorical_color(cluster_id):
    return CATEGORICAL[int(cluster_id) % len(CATEGORICAL)]


class _Scale:
    """Linear data-to-pixel mapping with margins; y is flipped for display."""

    def __init__(self, xs, ys):
        self.x0 = float(np.min(xs))
        self.x1 = float(np.max(xs))
        self.y0 = float(np.min(ys))
        self.y1 = float(np.max(ys))
        self.sx = (WIDTH - 2 * MARGIN) / (self.x1 - self.x0 or 1.0)
        self.sy = (HEIGHT - 2 * MARGIN) / (self.y1 - self.y0 or 1.0)

    def x(self, v):
        return MARGIN + (float(v) - self.x0) * self.sx

    def y(self, v):
        return HEIGHT - MARGIN - (float(v) - self.y0) * self.sy


def _fmt(v):
    return f"{v:.3f}"


def _document(body):
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" '
            f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">\n'
            f'<rect width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>\n')
    return head + body + "</svg>\n"


def _potential_colors(potential):
    p = np.asarray(potential, dtype=np.float64)
    lo = float(np.min(p))
    hi = float(np.max(p))
    if hi == lo:
        return [sequential_color(0.5)] * len(p)
    return [sequential_color((float(v) - lo) / (hi - lo)) for v in p]


def _circles(scale, points, colors):
    rows = []
    for (x, y), color in zip(points, colors):
        rows.append(f'<circle cx="{_fmt(scale.x(x))}" cy="{_fmt(scale.y(y))}" '
                    f'r="{POINT_RADIUS}" fill="{color}"/>')
    return "\n".join(rows) + "\n"


def _segments(scale, points, pairs, stroke="#999999", width=0.6):
    rows = []
    for a, b in pairs:
        rows.append(f'<line x1="{_fmt(scale.x(points[a][0]))}" '
                    f'y1="{_fmt(scale.y(points[a][1]))}" '
                    f'x2="{_fmt(scale.x(points[b][0]))}" '
                    f'y2="{_fmt(scale.y(points[b][1]))}" '
                    f'stroke="{stroke}" stroke-width="{width}"/>')
    return "\n".join(rows) + ("\n" if rows else "")


def render_svg(view, *, points=None, potential=None, tri=None, it=None,
               assignment=None, dg=None):
    """Render one of the four views to an SVG document string.

    view is one of "delaunay_potential" (needs tri + potential),
    "it_potential" (points + it), "clusters" (points + assignment),
    "decision_graph" (dg).
    """
    if view == "delaunay_potential":
        if tri is None or potential is None:
            raise ValueError("delaunay_potential view needs tri and potential")
        pts = tri.points
        scale = _Scale(pts[:, 0], pts[:, 1])
        edges = sorted({tuple(sorted((a, b)))
                        for t in tri.triangles
                        for a, b in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2]))})
        body = _segments(scale, pts, edges)
        body += _circles(scale, pts, _potential_colors(potential))
        return _document(body)

    if view == "it_potential":
        if points is None or it is None:
            raise ValueError("it_potential view needs points and it")
        pts = np.asarray(points, dtype=np.float64)
        scale = _Scale(pts[:, 0], pts[:, 1])
        edges = [(i, int(it.parent[i])) for i in range(it.n)
                 if int(it.parent[i]) != i and not it.cut_flags[i]]
        body = _segments(scale, pts, edges, stroke="#555555")
        body += _circles(scale, pts, _potential_colors(it.potential))
        return _document(body)

    if view == "clusters":
        if points is None or assignment is None:
            raise ValueError("clusters view needs points and assignment")
        pts = np.asarray(points, dtype=np.float64)
        scale = _Scale(pts[:, 0], pts[:, 1])
        ids = assignment.cluster_id if hasattr(assignment, "cluster_id") else assignment
        colors = [categorical_color(c) for c in ids]
        return _document(_circles(scale, pts, colors))

    if view == "decision_graph":
        if dg is None:
            raise ValueError("decision_graph view needs dg")
        if len(dg) == 0:
            return _document("")
        scale = _Scale(dg.p, dg.w)
        frame = (f'<rect x="{MARGIN}" y="{MARGIN}" width="{WIDTH - 2 * MARGIN}" '
                 f'height="{HEIGHT - 2 * MARGIN}" fill="none" stroke="#333333"/>\n')
        marks = _circles(scale, np.column_stack([dg.p, dg.w]),
                         ["#1f77b4"] * len(dg))
        return _document(frame + marks)

    raise ValueError(f"unknown view {view!r}")
