"""Exact 2D Delaunay triangulation, convex hulls, and hull-clipped Voronoi cells.

The triangulation is built incrementally (Bowyer-Watson cavity insertion
with a point-location walk) over a symbolic vertex at infinity, using the
exact sign predicates from :mod:`dtclust.predicates`.  Exact cocircular
ties are resolved by an index-keyed symbolic perturbation: each point's
lifted paraboloid coordinate is lowered by an infinitesimal weight that
shrinks with the point index, so lower-indexed points win ties and the
triangulation is unique and order-independent.

Exact duplicate points are collapsed to their lowest-index representative
before triangulation; duplicates inherit the representative's
geometry-derived quantities downstream.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput
from .predicates import incircle_sign, orient2d

__all__ = [
    "Triangulation", "delaunay", "brute_force_delaunay", "convex_hull",
    "triangle_area", "triangle_areas", "hull_area", "voronoi_cell_polygon",
    "voronoi_cell_areas", "validate_triangulation",
]

INFINITE = -1  # symbolic vertex closing the triangulation outside the hull


@dataclass
class Triangulation:
    """Delaunay triangulation of a planar point set.

    points          -- (n, 2) input coordinates, duplicates included
    triangles       -- CCW index triples over representative sites,
                       smallest vertex first, lexicographically sorted
    hull            -- boundary cycle in CCW order starting at the smallest
                       boundary index (collinear boundary points included)
    neighbor_sets   -- per-site set of Delaunay-adjacent sites
    representative  -- per-point index of its duplicate-collapse representative
    sites           -- sorted representative indices (the triangulated sites)
    """

    points: np.ndarray
    triangles: list
    hull: list
    neighbor_sets: dict
    representative: np.ndarray
    sites: np.ndarray

    @property
    def n_points(self):
        return len(self.points)


def _as_points(points):
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 2:
        raise DegenerateInput(f"expected an (n, 2) point array, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise DegenerateInput("points contain non-finite coordinates")
    return pts


def _collapse_duplicates(pts):
    """Map each point to its lowest-index exact duplicate."""
    seen = {}
    rep = np.empty(len(pts), dtype=np.intp)
    for i, (x, y) in enumerate(pts):
        key = (float(x), float(y))
        if key in seen:
            rep[i] = seen[key]
        else:
            seen[key] = i
            rep[i] = i
    sites = np.flatnonzero(rep == np.arange(len(pts)))
    return rep, sites


def _shoelace(poly):
    """Signed area of a polygon given as an (m, 2) array; positive for CCW."""
    x = poly[:, 0]
    y = poly[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


class _Mesh:
    """Mutable triangle store used while inserting points."""

    def __init__(self, pts, sites):
        self._x = [float(v) for v in pts[:, 0]]
        self._y = [float(v) for v in pts[:, 1]]
        self.sites = [int(s) for s in sites]
        self.tri = {}   # tid -> (v0, v1, v2); edge k joins v[k] -> v[(k+1)%3]
        self.adj = {}   # tid -> [neighbor across edge 0, 1, 2]
        self._next = 0
        self.last = None

    # -- predicates ------------------------------------------------------

    def _orient(self, i, j, k):
        x, y = self._x, self._y
        return orient2d(x[i], y[i], x[j], y[j], x[k], y[k])

    def _in_disk(self, ia, ib, ic, iq):
        """Perturbed empty-circumdisk test for CCW triangle (ia, ib, ic)."""
        x, y = self._x, self._y
        s = incircle_sign(x[ia], y[ia], x[ib], y[ib], x[ic], y[ic], x[iq], y[iq])
        if s != 0:
            return s > 0
        # Exactly cocircular: infinitesimal index-keyed weights on the
        # paraboloid lift decide; the dominant weight belongs to the lowest
        # index, and its cofactor in the lifted determinant fixes the sign.
        for idx in sorted((ia, ib, ic, iq)):
            if idx == ia:
                cof = self._orient(ib, ic, iq)
            elif idx == ib:
                cof = -self._orient(ia, ic, iq)
            elif idx == ic:
                cof = self._orient(ia, ib, iq)
            else:
                cof = -self._orient(ia, ib, ic)
            if cof:
                return cof < 0
        raise AssertionError("degenerate triangle reached the in-disk test")

    def _between(self, a, b, q):
        """For exactly collinear a, b, q: is q strictly inside segment (a, b)?"""
        x, y = self._x, self._y
        pa, pb, pq = (x[a], y[a]), (x[b], y[b]), (x[q], y[q])
        lo, hi = (pa, pb) if pa < pb else (pb, pa)
        return lo < pq < hi

    def _conflict(self, tid, q):
        vs = self.tri[tid]
        if INFINITE in vs:
            m = vs.index(INFINITE)
            a, b = vs[(m + 1) % 3], vs[(m + 2) % 3]
            # Disk of a hull face degenerates to the open half plane left of
            # a -> b, plus the open segment (a, b) on the line itself.
            s = self._orient(a, b, q)
            if s != 0:
                return s > 0
            return self._between(a, b, q)
        return self._in_disk(vs[0], vs[1], vs[2], q)

    # -- construction ----------------------------------------------------

    def build(self):
        order = self.sites
        a, b = order[0], order[1]
        pivot = None
        for m in range(2, len(order)):
            if self._orient(a, b, order[m]) != 0:
                pivot = m
                break
        if pivot is None:
            raise DegenerateInput("all distinct points are collinear")
        self._init_triangle(a, b, order[pivot])
        for m in range(2, len(order)):
            if m != pivot:
                self._insert(order[m])

    def _new(self, vs):
        tid = self._next
        self._next += 1
        self.tri[tid] = vs
        self.adj[tid] = [None, None, None]
        return tid

    def _init_triangle(self, a, b, c):
        if self._orient(a, b, c) < 0:
            b, c = c, b
        t0 = self._new((a, b, c))
        tab = self._new((b, a, INFINITE))
        tbc = self._new((c, b, INFINITE))
        tca = self._new((a, c, INFINITE))
        self.adj[t0] = [tab, tbc, tca]
        self.adj[tab] = [t0, tca, tbc]
        self.adj[tbc] = [t0, tab, tca]
        self.adj[tca] = [t0, tbc, tab]
        self.last = t0

    def _locate(self, q):
        """Walk to a triangle whose perturbed circumdisk contains q."""
        t = self.last
        entry = None
        for _ in range(4 * len(self.tri) + 16):
            vs = self.tri[t]
            if INFINITE in vs:
                return t
            moved = False
            for k in range(3):
                if k == entry:
                    continue
                u, v = vs[k], vs[(k + 1) % 3]
                if self._orient(u, v, q) < 0:
                    nxt = self.adj[t][k]
                    entry = self.adj[nxt].index(t)
                    t = nxt
                    moved = True
                    break
            if not moved:
                return t
        # The visibility walk cannot cycle on a Delaunay structure; scan as a
        # deterministic safety net (the cavity is unique, so the result is
        # unchanged regardless of which conflicting triangle seeds it).
        for tid in sorted(self.tri):
            if self._conflict(tid, q):
                return tid
        raise AssertionError("no conflicting triangle found")

    def _insert(self, q):
        t0 = self._locate(q)
        if not self._conflict(t0, q):
            t0 = next(tid for tid in sorted(self.tri) if self._conflict(tid, q))

        cavity = {t0}
        stack = [t0]
        while stack:
            t = stack.pop()
            for nb in self.adj[t]:
                if nb not in cavity and self._conflict(nb, q):
                    cavity.add(nb)
                    stack.append(nb)

        # Boundary edges (u -> v) of the cavity, with the triangle outside.
        records = []
        for t in cavity:
            vs = self.tri[t]
            for k in range(3):
                nb = self.adj[t][k]
                if nb in cavity:
                    continue
                records.append([vs[k], vs[(k + 1) % 3], t, nb, None])

        new_by_start = {}
        new_by_end = {}
        for rec in records:
            u, v = rec[0], rec[1]
            tid = self._new((u, v, q))
            rec[4] = tid
            new_by_start[u] = tid
            new_by_end[v] = tid

        for u, v, t_old, nb, tid in records:
            self.adj[nb][self.adj[nb].index(t_old)] = tid
            self.adj[tid][0] = nb
            self.adj[tid][1] = new_by_start[v]
            self.adj[tid][2] = new_by_end[u]

        for t in cavity:
            del self.tri[t]
            del self.adj[t]

        for u, v, _t_old, _nb, tid in records:
            if u != INFINITE and v != INFINITE:
                self.last = tid
                break

    # -- extraction ------------------------------------------------------

    def finite_triangles(self):
        out = []
        for vs in self.tri.values():
            if INFINITE in vs:
                continue
            m = min(range(3), key=lambda k: vs[k])
            out.append((vs[m], vs[(m + 1) % 3], vs[(m + 2) % 3]))
        out.sort()
        return out

    def hull_cycle(self):
        succ = {}
        for vs in self.tri.values():
            if INFINITE not in vs:
                continue
            m = vs.index(INFINITE)
            a, b = vs[(m + 1) % 3], vs[(m + 2) % 3]
            succ[b] = a
        start = min(succ)
        cycle = [start]
        cur = succ[start]
        while cur != start:
            cycle.append(cur)
            cur = succ[cur]
        return cycle


def _finish(pts, rep, sites, triangles, hull):
    neighbor_sets = {int(s): set() for s in sites}
    for a, b, c in triangles:
        neighbor_sets[a].update((b, c))
        neighbor_sets[b].update((a, c))
        neighbor_sets[c].update((a, b))
    return Triangulation(points=pts, triangles=triangles, hull=hull,
                         neighbor_sets=neighbor_sets, representative=rep,
                         sites=sites)


def delaunay(points):
    """Delaunay triangulation of a 2D point set.

    Deterministic for a fixed input ordering; exact duplicates are collapsed
    to their lowest-index representative, and cocircular degeneracies are
    resolved by the index-keyed perturbation rule.

    Raises DegenerateInput for fewer than 3 distinct points or an entirely
    collinear set.
    """
    pts = _as_points(points)
    rep, sites = _collapse_duplicates(pts)
    if len(sites) < 3:
        raise DegenerateInput(f"need at least 3 distinct points, got {len(sites)}")
    mesh = _Mesh(pts, sites)
    mesh.build()
    return _finish(pts, rep, sites, mesh.finite_triangles(), mesh.hull_cycle())


def brute_force_delaunay(points):
    """Test oracle: keep every triple whose perturbed circumdisk is empty.

    O(n^4); intended for small inputs.  Uses the same exact predicates and
    perturbation rule as delaunay(), so the triangle sets must match.
    """
    pts = _as_points(points)
    rep, sites = _collapse_duplicates(pts)
    if len(sites) < 3:
        raise DegenerateInput(f"need at least 3 distinct points, got {len(sites)}")
    mesh = _Mesh(pts, sites)   # predicate helpers only; no build
    site_list = [int(s) for s in sites]

    kept = []
    for i, j, k in itertools.combinations(site_list, 3):
        s = mesh._orient(i, j, k)
        if s == 0:
            continue
        tri = (i, j, k) if s > 0 else (i, k, j)
        empty = True
        for q in site_list:
            if q in (i, j, k):
                continue
            if mesh._in_disk(tri[0], tri[1], tri[2], q):
                empty = False
                break
        if empty:
            kept.append(tri)
    if not kept:
        raise DegenerateInput("all distinct points are collinear")
    kept.sort()

    # Boundary edges appear in exactly one kept triangle; their in-triangle
    # direction traverses the hull CCW.
    edge_count = {}
    for a, b, c in kept:
        for u, v in ((a, b), (b, c), (c, a)):
            edge_count[frozenset((u, v))] = edge_count.get(frozenset((u, v)), 0) + 1
    succ = {}
    for a, b, c in kept:
        for u, v in ((a, b), (b, c), (c, a)):
            if edge_count[frozenset((u, v))] == 1:
                succ[u] = v
    start = min(succ)
    hull = [start]
    cur = succ[start]
    while cur != start:
        hull.append(cur)
        cur = succ[cur]

    return _finish(pts, rep, sites, kept, hull)


def convex_hull(points):
    """Convex hull of the distinct points.

    Returns (hull_indices, hull_area): strictly convex vertices in CCW order
    starting at the smallest participating index, and the shoelace area.
    """
    pts = _as_points(points)
    rep, sites = _collapse_duplicates(pts)
    if len(sites) < 3:
        raise DegenerateInput(f"need at least 3 distinct points, got {len(sites)}")
    x = [float(v) for v in pts[:, 0]]
    y = [float(v) for v in pts[:, 1]]
    order = sorted((int(s) for s in sites), key=lambda i: (x[i], y[i]))

    def turn(i, j, k):
        return orient2d(x[i], y[i], x[j], y[j], x[k], y[k])

    lower = []
    for i in order:
        while len(lower) >= 2 and turn(lower[-2], lower[-1], i) <= 0:
            lower.pop()
        lower.append(i)
    upper = []
    for i in reversed(order):
        while len(upper) >= 2 and turn(upper[-2], upper[-1], i) <= 0:
            upper.pop()
        upper.append(i)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateInput("all distinct points are collinear")
    pos = hull.index(min(hull))
    hull = hull[pos:] + hull[:pos]
    area = _shoelace(pts[hull])
    return hull, area


def triangle_area(tri, index):
    """Positive (CCW shoelace) area of the stored triangle at `index`."""
    a, b, c = tri.triangles[index]
    p = tri.points
    return 0.5 * float((p[b, 0] - p[a, 0]) * (p[c, 1] - p[a, 1])
                       - (p[b, 1] - p[a, 1]) * (p[c, 0] - p[a, 0]))


def triangle_areas(tri):
    """Areas of all stored triangles as an array."""
    t = np.asarray(tri.triangles, dtype=np.intp)
    p = tri.points
    a, b, c = p[t[:, 0]], p[t[:, 1]], p[t[:, 2]]
    return 0.5 * ((b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1])
                  - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0]))


def hull_area(tri):
    """Area of the triangulation's boundary polygon."""
    return _shoelace(tri.points[tri.hull])


def _clip_halfplane(poly, normal, offset):
    """Sutherland-Hodgman clip of a polygon to {x : normal . x <= offset}."""
    nx, ny = normal
    out = []
    m = len(poly)
    for i in range(m):
        cx, cy = poly[i]
        qx, qy = poly[(i + 1) % m]
        dc = nx * cx + ny * cy - offset
        dq = nx * qx + ny * qy - offset
        if dc <= 0.0:
            out.append((cx, cy))
        if (dc < 0.0 < dq) or (dq < 0.0 < dc):
            t = dc / (dc - dq)
            out.append((cx + t * (qx - cx), cy + t * (qy - cy)))
    return out


def voronoi_cell_polygon(tri, site):
    """Vertices (CCW) of a site's Voronoi cell clipped to the convex hull.

    The cell is the hull polygon cut by the perpendicular bisector of every
    Delaunay-neighbor pair; non-neighbor bisectors are redundant.
    """
    pts = tri.points
    site = int(site)
    px, py = float(pts[site, 0]), float(pts[site, 1])
    poly = [(float(pts[i, 0]), float(pts[i, 1])) for i in tri.hull]
    for j in sorted(tri.neighbor_sets[site]):
        qx, qy = float(pts[j, 0]), float(pts[j, 1])
        nx, ny = qx - px, qy - py
        offset = 0.5 * (nx * (px + qx) + ny * (py + qy))
        poly = _clip_halfplane(poly, (nx, ny), offset)
        if len(poly) < 3:
            break
    return poly


def voronoi_cell_areas(tri):
    """Per-point area of the Voronoi cell intersected with the convex hull.

    Cells of boundary sites are unbounded in the plane; clipping to the
    dataset hull makes every area finite and the cell areas a partition of
    the hull (their sum equals the hull area).  Duplicates inherit their
    representative's area.
    """
    areas = np.zeros(len(tri.points))
    for s in tri.sites:
        poly = voronoi_cell_polygon(tri, s)
        if len(poly) >= 3:
            arr = np.asarray(poly)
            areas[int(s)] = 0.5 * float(np.dot(arr[:, 0], np.roll(arr[:, 1], -1))
                                        - np.dot(arr[:, 1], np.roll(arr[:, 0], -1)))
    return areas[tri.representative]


def validate_triangulation(tri):
    """Assert structural invariants; raises AssertionError with a reason.

    Checks CCW orientation, the exact (perturbed) empty-circumcircle
    property, Euler counts, neighbor symmetry, and area conservation.
    A vectorized float filter screens the circumcircle checks; only
    near-ties are re-tested exactly.
    """
    pts = tri.points
    sites = [int(s) for s in tri.sites]
    mesh = _Mesh(pts, tri.sites)

    areas = triangle_areas(tri)
    assert np.all(areas > 0.0), "non-CCW or degenerate triangle stored"

    qx = pts[sites, 0]
    qy = pts[sites, 1]
    site_pos = {s: p for p, s in enumerate(sites)}
    from .predicates import _ICC_BOUND  # filter constant shared with the predicate

    for a, b, c in tri.triangles:
        adx = pts[a, 0] - qx
        ady = pts[a, 1] - qy
        bdx = pts[b, 0] - qx
        bdy = pts[b, 1] - qy
        cdx = pts[c, 0] - qx
        cdy = pts[c, 1] - qy
        bdxcdy = bdx * cdy
        cdxbdy = cdx * bdy
        alift = adx * adx + ady * ady
        cdxady = cdx * ady
        adxcdy = adx * cdy
        blift = bdx * bdx + bdy * bdy
        adxbdy = adx * bdy
        bdxady = bdx * ady
        clift = cdx * cdx + cdy * cdy
        det = (alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy)
               + clift * (adxbdy - bdxady))
        permanent = ((np.abs(bdxcdy) + np.abs(cdxbdy)) * alift
                     + (np.abs(cdxady) + np.abs(adxcdy)) * blift
                     + (np.abs(adxbdy) + np.abs(bdxady)) * clift)
        errbound = _ICC_BOUND * permanent
        for k in (a, b, c):
            det[site_pos[k]] = -1.0
            errbound[site_pos[k]] = 0.0
        assert not np.any(det > errbound), f"point strictly inside circumcircle of {(a, b, c)}"
        for p in np.flatnonzero(-det <= errbound):
            q = sites[p]
            if q in (a, b, c):
                continue
            assert not mesh._in_disk(a, b, c, q), \
                f"perturbed circumdisk of {(a, b, c)} contains {q}"

    n = len(sites)
    h = len(tri.hull)
    n_tri = len(tri.triangles)
    assert n_tri == 2 * n - h - 2, f"Euler triangle count: {n_tri} != 2*{n}-{h}-2"
    edges = set()
    for a, b, c in tri.triangles:
        edges.update((frozenset((a, b)), frozenset((b, c)), frozenset((a, c))))
    assert len(edges) == 3 * n - h - 3, f"Euler edge count: {len(edges)} != 3*{n}-{h}-3"

    for i, nbrs in tri.neighbor_sets.items():
        for j in nbrs:
            assert i in tri.neighbor_sets[j], f"asymmetric neighbor sets at ({i}, {j})"

    total = hull_area(tri)
    assert total > 0.0
    assert abs(float(np.sum(areas)) - total) <= 1e-9 * total, "triangle areas != hull area"
    cells = voronoi_cell_areas(tri)
    site_cells = cells[tri.sites]
    assert np.all(site_cells > 0.0), "non-positive clipped Voronoi cell"
    assert abs(float(np.sum(site_cells)) - total) <= 1e-9 * total, "cell areas != hull area"
