"""Severing inter-cluster edges: decision-graph and semi-supervised cutters.

The decision graph plots each non-root node's potential P against its
outgoing edge length W; edges that bridge clusters start at low-P/high-W
"pop-out" points.  `dg_auto_cut` scores pop-outs deterministically,
`dg_manual_cut` severs an explicit selection, and `ss_divisive_cut`
removes edges top-down by length whenever doing so separates labeled
points into purer components.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ImpureResidueWarning, InsufficientLabels, InvalidCutNode, KTooLarge
from .intree import ClusterAssignment, InTree, assign_clusters


@dataclass
class DecisionGraph:
    """(node, P, W) for every non-root node, in node-index order."""

    nodes: np.ndarray
    p: np.ndarray
    w: np.ndarray

    def __len__(self):
        return len(self.nodes)

    def entries(self):
        return [(int(n), float(p), float(w))
                for n, p, w in zip(self.nodes, self.p, self.w)]


@dataclass
class CutResult:
    """Severed edges and the clustering they induce."""

    cut_nodes: list
    assignment: ClusterAssignment


def _require_fresh(it: InTree, single_root=True):
    if np.any(it.cut_flags):
        raise ValueError("expected a fresh in-tree with no prior cuts")
    if single_root:
        roots = np.flatnonzero(it.parent == np.arange(it.n))
        if len(roots) != 1:
            raise ValueError(f"expected a single-root in-tree, found {len(roots)} roots")


def decision_graph(it: InTree) -> DecisionGraph:
    """Decision-graph entries of a fresh tree; roots are excluded, so a
    single-root tree yields exactly n - 1 entries."""
    _require_fresh(it, single_root=False)
    nodes = np.flatnonzero(it.parent != np.arange(it.n))
    return DecisionGraph(nodes=nodes, p=it.potential[nodes],
                         w=it.edge_length[nodes])


def _minmax(values):
    lo = float(np.min(values))
    hi = float(np.max(values))
    if hi == lo:
        return np.full(len(values), 0.5)
    return (values - lo) / (hi - lo)


def gamma_scores(dg: DecisionGraph) -> np.ndarray:
    """Pop-out score per entry: normalized W times (1 - normalized P).

    Min-max normalization is over the decision-graph entries; a degenerate
    (constant) axis normalizes to 0.5 everywhere.
    """
    if len(dg) == 0:
        return np.zeros(0)
    return _minmax(dg.w) * (1.0 - _minmax(dg.p))


def top_gamma_nodes(dg: DecisionGraph, count: int) -> list:
    """The `count` nodes with the largest pop-out score, ties to lower index."""
    gamma = gamma_scores(dg)
    order = sorted(range(len(dg)), key=lambda e: (-gamma[e], dg.nodes[e]))
    return [int(dg.nodes[e]) for e in order[:count]]


def dg_auto_cut(it: InTree, k: int) -> CutResult:
    """Sever the k - 1 highest-scoring pop-out edges, yielding exactly k clusters."""
    _require_fresh(it)
    if k < 1:
        raise ValueError(f"cluster count must be at least 1, got {k}")
    if k > it.n:
        raise KTooLarge(f"requested {k} clusters from {it.n} points")
    cut_nodes = sorted(top_gamma_nodes(decision_graph(it), k - 1))
    return CutResult(cut_nodes=cut_nodes,
                     assignment=assign_clusters(it.with_cuts(cut_nodes)))


def dg_manual_cut(it: InTree, cut_nodes) -> CutResult:
    """Sever exactly the listed non-root edges (an interactive selection)."""
    _require_fresh(it)
    seen = set()
    for v in cut_nodes:
        v = int(v)
        if v < 0 or v >= it.n:
            raise InvalidCutNode(v, "cut node out of range")
        if it.parent[v] == v:
            raise InvalidCutNode(v, "cannot cut a root")
        if v in seen:
            raise InvalidCutNode(v, "duplicate cut node")
        seen.add(v)
    cut_nodes = sorted(seen)
    return CutResult(cut_nodes=cut_nodes,
                     assignment=assign_clusters(it.with_cuts(cut_nodes)))


def _children_lists(it: InTree):
    children = [[] for _ in range(it.n)]
    for v in range(it.n):
        p = int(it.parent[v])
        if p != v:
            children[p].append(v)
    return children


def _subtree(v, children, cut):
    """Nodes whose root path runs through v in the current forest."""
    out = [v]
    stack = [v]
    while stack:
        u = stack.pop()
        for c in children[u]:
            if not cut[c]:
                out.append(c)
                stack.append(c)
    return out


def ss_divisive_cut(it: InTree, labels: dict) -> CutResult:
    """Semi-supervised divisive cutting driven by partial labels.

    Non-root edges are examined once, in strictly decreasing length order
    (ties to the lower start node).  An edge inside a component holding at
    least two label kinds is severed iff both sides retain a labeled point
    and the larger per-side kind count drops below the component's count.
    Components that still mix label kinds after the pass trigger an
    ImpureResidueWarning (reported, not fatal).
    """
    _require_fresh(it)
    if len(labels) < 2:
        raise InsufficientLabels(
            f"need at least 2 labeled points, got {len(labels)}")

    children = _children_lists(it)
    cut = np.zeros(it.n, dtype=bool)

    def component_root(v):
        j = v
        while int(it.parent[j]) != j and not cut[j]:
            j = int(it.parent[j])
        return j

    def kinds_of(nodes):
        return {labels[u] for u in nodes if u in labels}

    order = sorted((v for v in range(it.n) if int(it.parent[v]) != v),
                   key=lambda v: (-it.edge_length[v], v))
    committed = []
    for v in order:
        root = component_root(v)
        component = _subtree(root, children, cut)
        comp_kinds = kinds_of(component)
        if len(comp_kinds) < 2:
            continue
        side_a = set(_subtree(v, children, cut))
        side_b = [u for u in component if u not in side_a]
        kinds_a = kinds_of(side_a)
        kinds_b = kinds_of(side_b)
        # Both offspring must carry genetic material, and the split must
        # strictly reduce the worst per-side kind count.
        if not kinds_a or not kinds_b:
            continue
        if max(len(kinds_a), len(kinds_b)) < len(comp_kinds):
            cut[v] = True
            committed.append(v)

    cut_nodes = sorted(committed)
    result = CutResult(cut_nodes=cut_nodes,
                       assignment=assign_clusters(it.with_cuts(cut_nodes)))
    by_cluster = {}
    for u, kind in labels.items():
        by_cluster.setdefault(int(result.assignment.cluster_id[u]), set()).add(kind)
    impure = sorted(c for c, ks in by_cluster.items() if len(ks) > 1)
    if impure:
        warnings.warn(ImpureResidueWarning(
            f"{len(impure)} component(s) still hold multiple label kinds: {impure}"))
    return result
