import warnings

import numpy as np
import pytest

from dtclust.cutting import (decision_graph, dg_auto_cut, dg_manual_cut,
                             gamma_scores, ss_divisive_cut, top_gamma_nodes)
from dtclust.errors import (ImpureResidueWarning, InsufficientLabels,
                            InvalidCutNode, KTooLarge)
from dtclust.intree import build_it

from conftest import random_points


def three_node_tree():
    return build_it([(0, 0), (1, 0), (2, 0)], [3.0, 1.0, 2.0])


def chain_tree():
    """Chain 5 -> ... -> 0 with one long edge out of node 3."""
    pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (10.0, 0.0), (11.0, 0.0), (12.0, 0.0)]
    p = [float(i) for i in range(6)]
    it = build_it(pts, p)
    assert list(it.parent) == [0, 0, 1, 2, 3, 4]
    assert it.edge_length[3] == pytest.approx(8.0)
    return it


def test_decision_graph_entries():
    dg = decision_graph(three_node_tree())
    assert dg.entries() == [(0, 3.0, 1.0), (2, 2.0, 1.0)]


def test_decision_graph_counts():
    it = build_it(random_points(60, 25), np.random.default_rng(61).uniform(0, 1, 25))
    assert len(decision_graph(it)) == 24
    single = build_it([(0.0, 0.0)], [1.0])
    assert len(decision_graph(single)) == 0


def test_decision_graph_rejects_cut_tree():
    with pytest.raises(ValueError):
        decision_graph(three_node_tree().with_cuts([2]))


def test_decision_graph_on_multi_root_forest():
    # delaunay_descent forests have several roots; each is excluded.
    from dtclust.geometry import delaunay
    from dtclust.intree import delaunay_descent
    from dtclust.potential import LocalSizeKind, local_size

    pts = random_points(64, 50)
    tri = delaunay(pts)
    it = delaunay_descent(tri, local_size(tri, LocalSizeKind.SIMPLEX))
    dg = decision_graph(it)
    n_roots = sum(1 for i in range(it.n) if it.parent[i] == i)
    assert len(dg) == it.n - n_roots


def test_gamma_hand_trace():
    # W ties normalize to 0.5 each; only P separates the two entries.
    it = three_node_tree()
    dg = decision_graph(it)
    assert gamma_scores(dg) == pytest.approx([0.0, 0.5])
    assert top_gamma_nodes(dg, 1) == [2]


def test_dg_auto_cut_k2():
    res = dg_auto_cut(three_node_tree(), 2)
    assert res.cut_nodes == [2]
    assert list(res.assignment.cluster_id) == [0, 0, 1]


def test_dg_auto_cut_k1_and_kn():
    it = three_node_tree()
    assert dg_auto_cut(it, 1).assignment.k == 1
    res = dg_auto_cut(it, 3)
    assert res.assignment.k == 3
    assert len(res.cut_nodes) == 2


def test_dg_auto_cut_k_too_large():
    with pytest.raises(KTooLarge):
        dg_auto_cut(three_node_tree(), 4)
    with pytest.raises(ValueError):
        dg_auto_cut(three_node_tree(), 0)


def test_dg_auto_exact_k_on_random():
    pts = random_points(70, 40)
    it = build_it(pts, np.random.default_rng(71).uniform(0, 1, 40))
    for k in (1, 2, 5, 40):
        assert dg_auto_cut(it, k).assignment.k == k


def test_dg_manual_cut_identity():
    res = dg_manual_cut(three_node_tree(), [])
    assert res.assignment.k == 1


def test_dg_manual_cut_matches_hand_trace():
    res = dg_manual_cut(three_node_tree(), [2])
    assert list(res.assignment.cluster_id) == [0, 0, 1]


def test_dg_manual_cut_rejects_root_and_bad_nodes():
    it = three_node_tree()
    with pytest.raises(InvalidCutNode):
        dg_manual_cut(it, [1])  # node 1 is the root
    with pytest.raises(InvalidCutNode):
        dg_manual_cut(it, [7])
    with pytest.raises(InvalidCutNode):
        dg_manual_cut(it, [2, 2])


def test_manual_top_gamma_equals_auto():
    pts = random_points(80, 60)
    it = build_it(pts, np.random.default_rng(81).uniform(0, 1, 60))
    for k in (2, 4, 9):
        auto = dg_auto_cut(it, k)
        manual = dg_manual_cut(it, top_gamma_nodes(decision_graph(it), k - 1))
        assert np.array_equal(auto.assignment.cluster_id,
                              manual.assignment.cluster_id)


def test_ss_chain_hand_trace():
    it = chain_tree()
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        res = ss_divisive_cut(it, {0: "A", 5: "B"})
    assert res.cut_nodes == [3]
    assert list(res.assignment.cluster_id) == [0, 0, 0, 1, 1, 1]


def test_ss_requires_two_labeled_points():
    it = chain_tree()
    with pytest.raises(InsufficientLabels):
        ss_divisive_cut(it, {0: "A"})
    with pytest.raises(InsufficientLabels):
        ss_divisive_cut(it, {})


def test_ss_same_kind_twice_no_cuts():
    # Two labels of one kind: nothing is impure, so nothing is cut.
    it = chain_tree()
    res = ss_divisive_cut(it, {0: "A", 5: "A"})
    assert res.cut_nodes == []
    assert res.assignment.k == 1


def test_ss_pure_components_no_cut():
    # Two kinds, already separated by potential structure: the only impure
    # component is the whole tree; the rule cuts once and stops.
    it = chain_tree()
    res = ss_divisive_cut(it, {1: "A", 4: "B"})
    assert len(res.cut_nodes) == 1
    assert res.assignment.k == 2


def test_ss_impure_residue_warning():
    # Interleaved duplicate kinds on a uniform chain: no single edge can
    # strictly reduce the per-side kind count, so the pass ends impure.
    pts = [(float(i), 0.0) for i in range(6)]
    it = build_it(pts, [float(i) for i in range(6)])
    labels = {0: "A", 2: "B", 3: "A", 5: "B"}
    with pytest.warns(ImpureResidueWarning):
        res = ss_divisive_cut(it, labels)
    assert res.assignment.k >= 1


def test_ss_never_creates_label_free_component():
    for seed in range(15):
        rng = np.random.default_rng(900 + seed)
        n = 40
        pts = rng.uniform(0, 10, (n, 2))
        it = build_it(pts, rng.uniform(0, 1, n))
        labeled = rng.choice(n, size=6, replace=False)
        labels = {int(v): str(rng.integers(0, 3)) for v in labeled}
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ImpureResidueWarning)
            res = ss_divisive_cut(it, labels)
        ids = res.assignment.cluster_id
        for c in range(res.assignment.k):
            members = np.flatnonzero(ids == c)
            assert any(int(m) in labels for m in members)


def test_ss_cluster_count_is_cuts_plus_one():
    rng = np.random.default_rng(99)
    pts = rng.uniform(0, 10, (30, 2))
    it = build_it(pts, rng.uniform(0, 1, 30))
    labels = {0: "A", 7: "B", 19: "C"}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ImpureResidueWarning)
        res = ss_divisive_cut(it, labels)
    assert res.assignment.k == 1 + len(res.cut_nodes)


def test_cutters_do_not_mutate_input():
    it = three_node_tree()
    dg_auto_cut(it, 2)
    dg_manual_cut(it, [2])
    ss_divisive_cut(it, {0: "A", 2: "B"})
    assert not it.cut_flags.any()
