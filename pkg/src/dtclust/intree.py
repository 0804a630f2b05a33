"""In-tree construction by nearest-neighbor descent and cluster assignment.

Each node points at the nearest node of strictly lower potential (equal
potential with a lower index also counts, which is what makes duplicate
points chain onto their representative).  Candidates are drawn from the
whole dataset, not just tessellation neighbors; the tree therefore need
not be a subgraph of the Delaunay graph.  `delaunay_descent` is the
gradient-style baseline that restricts moves to Delaunay neighbors and
consequently stops at every local minimum.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Triangulation


@dataclass
class InTree:
    """Directed forest with one outgoing edge per node.

    parent      -- I_i; self-index at roots
    edge_length -- Euclidean length of the outgoing edge (0 at roots)
    potential   -- per-node potential, kept for decision-graph use
    cut_flags   -- True where the outgoing edge has been severed; a flagged
                   node acts as the root of its component
    """

    parent: np.ndarray
    edge_length: np.ndarray
    potential: np.ndarray
    cut_flags: np.ndarray

    @property
    def n(self):
        return len(self.parent)

    def is_root(self, i):
        return self.parent[i] == i or bool(self.cut_flags[i])

    def root_nodes(self):
        return [i for i in range(self.n) if self.is_root(i)]

    def with_cuts(self, cut_nodes):
        """Copy of the tree with the given outgoing edges severed."""
        flags = self.cut_flags.copy()
        flags[list(cut_nodes)] = True
        return InTree(parent=self.parent.copy(),
                      edge_length=self.edge_length.copy(),
                      potential=self.potential.copy(),
                      cut_flags=flags)


@dataclass
class ClusterAssignment:
    """Dense per-node cluster ids; roots[c] is the exemplar of cluster c."""

    cluster_id: np.ndarray
    k: int
    roots: list


def build_it(points, potential) -> InTree:
    """Nearest-neighbor descent over the full candidate set.

    Node i points at the closest node among those with lower potential
    (or equal potential and lower index); distance ties break to the
    lowest index.  Exactly one node, the (potential, index) minimum, ends
    up self-parented.
    """
    pts = np.asarray(points, dtype=np.float64)
    p = np.asarray(potential, dtype=np.float64)
    n = len(p)
    if len(pts) != n:
        raise ValueError(f"{len(pts)} points but {n} potentials")
    parent = np.arange(n, dtype=np.intp)
    edge = np.zeros(n)
    # Ascending (potential, index) order: everything before position r is
    # exactly the candidate set of the node at position r.
    order = np.lexsort((np.arange(n), p))
    for r in range(1, n):
        i = order[r]
        cand = order[:r]
        d2 = (pts[cand, 0] - pts[i, 0]) ** 2 + (pts[cand, 1] - pts[i, 1]) ** 2
        best = d2.min()
        j = int(cand[d2 == best].min())
        parent[i] = j
        edge[i] = np.sqrt(best)
    return InTree(parent=parent, edge_length=edge, potential=p.copy(),
                  cut_flags=np.zeros(n, dtype=bool))


def delaunay_descent(tri: Triangulation, potential) -> InTree:
    """Steepest-descent baseline restricted to Delaunay neighbors.

    Each site moves to its (potential, index)-smallest neighbor if that
    neighbor precedes it; otherwise it is a local extreme and becomes a
    root.  Duplicate points attach to their representative at distance 0.
    """
    pts = tri.points
    p = np.asarray(potential, dtype=np.float64)
    n = len(pts)
    if len(p) != n:
        raise ValueError(f"{n} points but {len(p)} potentials")
    parent = np.arange(n, dtype=np.intp)
    edge = np.zeros(n)
    for i in range(n):
        s = int(tri.representative[i])
        if s != i:
            parent[i] = s
            continue
        best = None
        for j in sorted(tri.neighbor_sets[s]):
            if (p[j], j) < (p[i], i) and (best is None or (p[j], j) < best):
                best = (p[j], j)
        if best is not None:
            j = best[1]
            parent[i] = j
            edge[i] = float(np.hypot(pts[j, 0] - pts[i, 0], pts[j, 1] - pts[i, 1]))
    return InTree(parent=parent, edge_length=edge, potential=p.copy(),
                  cut_flags=np.zeros(n, dtype=bool))


def assign_clusters(it: InTree) -> ClusterAssignment:
    """Follow parent pointers to each node's root and label clusters.

    Cluster ids are dense and ordered by the first node index at which each
    root appears.  Path-following is iterative with memoization, so chain
    shaped trees cannot overflow the stack.
    """
    n = it.n
    root_of = np.full(n, -1, dtype=np.intp)
    for i in range(n):
        path = []
        j = i
        while root_of[j] < 0 and not it.is_root(j):
            path.append(j)
            j = int(it.parent[j])
            if len(path) > n:
                raise ValueError("parent pointers contain a cycle")
        r = j if root_of[j] < 0 else int(root_of[j])
        root_of[i] = r
        for v in path:
            root_of[v] = r

    cluster_of_root = {}
    roots = []
    cluster_id = np.empty(n, dtype=np.intp)
    for i in range(n):
        r = int(root_of[i])
        if r not in cluster_of_root:
            cluster_of_root[r] = len(roots)
            roots.append(r)
        cluster_id[i] = cluster_of_root[r]
    return ClusterAssignment(cluster_id=cluster_id, k=len(roots), roots=roots)
