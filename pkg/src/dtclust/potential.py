"""Per-point local size and its monotone transform into a potential.

The local size S measures how much room a point has in the tessellation
(large where data are sparse); the potential P = f(S) for a strictly
increasing f.  Density is the inverse of the local size but is never
materialized here: every downstream step consumes the potential.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import NonPositiveSize
from .geometry import (Triangulation, _as_points, _collapse_duplicates,
                       triangle_areas, voronoi_cell_areas)


class LocalSizeKind(enum.Enum):
    """How the per-point local size S is measured.

    SIMPLEX -- total area of the Delaunay triangles incident to the point
    VORONOI -- area of the point's Voronoi cell clipped to the hull
    MEDIAN/MEAN/MAX/MIN/SUM -- that statistic of the distances from the
        point to its Delaunay neighbors
    """

    SIMPLEX = "simplex"
    VORONOI = "voronoi"
    MEDIAN = "median"
    MEAN = "mean"
    MAX = "max"
    MIN = "min"
    SUM = "sum"


class TransformKind(enum.Enum):
    """Strictly increasing transform applied elementwise to S."""

    IDENTITY = "id"
    LOG_RATIO = "log-ratio"   # log(1 + S / min S)
    LOG1P = "log1p"
    NEG_EXP = "negexp"        # -exp(-S)
    SIGMOID = "sigmoid"       # 1 / (1 + exp(-S))


@dataclass
class PotentialField:
    """Local sizes and potentials for every input point (duplicates included)."""

    s: np.ndarray
    p: np.ndarray
    kind: LocalSizeKind
    transform: TransformKind


_DIST_STATS = {
    LocalSizeKind.MEDIAN: np.median,
    LocalSizeKind.MEAN: np.mean,
    LocalSizeKind.MAX: np.max,
    LocalSizeKind.MIN: np.min,
    LocalSizeKind.SUM: np.sum,
}


def local_size(tri: Triangulation, kind: LocalSizeKind) -> np.ndarray:
    """Per-point local size under the chosen definition.

    Duplicates inherit their representative's value.  An even neighbor
    count under MEDIAN takes the mean of the two middle distances.
    """
    pts = tri.points
    per_site = np.zeros(len(pts))
    if kind is LocalSizeKind.SIMPLEX:
        areas = triangle_areas(tri)
        for (a, b, c), ar in zip(tri.triangles, areas):
            per_site[a] += ar
            per_site[b] += ar
            per_site[c] += ar
        return per_site[tri.representative]
    if kind is LocalSizeKind.VORONOI:
        return voronoi_cell_areas(tri)
    stat = _DIST_STATS[kind]
    for s in tri.sites:
        s = int(s)
        nbrs = sorted(tri.neighbor_sets[s])
        d = np.hypot(pts[nbrs, 0] - pts[s, 0], pts[nbrs, 1] - pts[s, 1])
        per_site[s] = stat(d)
    return per_site[tri.representative]


def transform(s: np.ndarray, kind: TransformKind) -> np.ndarray:
    """Apply the transform elementwise; requires every S > 0.

    All variants are strictly increasing, so the ranking of the returned
    potentials equals the ranking of the sizes (ties included).
    """
    s = np.asarray(s, dtype=np.float64)
    if s.size and float(np.min(s)) <= 0.0:
        raise NonPositiveSize(f"local sizes must be positive, min is {np.min(s)}")
    if kind is TransformKind.IDENTITY:
        return s.copy()
    if kind is TransformKind.LOG_RATIO:
        return np.log1p(s / np.min(s))
    if kind is TransformKind.LOG1P:
        return np.log1p(s)
    if kind is TransformKind.NEG_EXP:
        return -np.exp(-s)
    if kind is TransformKind.SIGMOID:
        return 1.0 / (1.0 + np.exp(-s))
    raise ValueError(f"unknown transform {kind!r}")


def compute_potential(tri: Triangulation,
                      kind: LocalSizeKind = LocalSizeKind.SIMPLEX,
                      tf: TransformKind = TransformKind.LOG_RATIO) -> PotentialField:
    """Local size plus transform in one step; defaults match the figures
    (incident-triangle area with the log-ratio transform)."""
    s = local_size(tri, kind)
    return PotentialField(s=s, p=transform(s, tf), kind=kind, transform=tf)


def complete_graph_local_size(points, kind: LocalSizeKind) -> np.ndarray:
    """Distance-statistic local size over the complete graph.

    Explicit opt-in fallback for datasets the tessellation rejects (for
    example, all points collinear): every other distinct point acts as a
    neighbor.  Only the distance statistics are defined; the area
    definitions need a triangulation.  Duplicates inherit their
    representative's value, as in the tessellated path.
    """
    if kind not in _DIST_STATS:
        raise ValueError(f"{kind} needs a triangulation; "
                         "only distance statistics have a complete-graph form")
    pts = _as_points(points)
    rep, sites = _collapse_duplicates(pts)
    if len(sites) < 2:
        raise NonPositiveSize("need at least 2 distinct points for distances")
    stat = _DIST_STATS[kind]
    coords = pts[sites]
    per_site = np.zeros(len(pts))
    for k, s in enumerate(sites):
        d = np.hypot(coords[:, 0] - pts[s, 0], coords[:, 1] - pts[s, 1])
        per_site[int(s)] = stat(np.delete(d, k))
    return per_site[rep]
