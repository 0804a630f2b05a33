import math

import numpy as np
import pytest

from dtclust.errors import NonPositiveSize
from dtclust.geometry import delaunay, hull_area
from dtclust.intree import build_it
from dtclust.potential import (LocalSizeKind, TransformKind, compute_potential,
                               local_size, transform)

from conftest import random_points

TRIANGLE = [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0)]


def test_local_size_simplex_triangle():
    t = delaunay(TRIANGLE)
    s = local_size(t, LocalSizeKind.SIMPLEX)
    assert s == pytest.approx([0.5, 0.5, 0.5])


def test_local_size_voronoi_triangle():
    t = delaunay(TRIANGLE)
    s = local_size(t, LocalSizeKind.VORONOI)
    assert s == pytest.approx([0.25, 0.125, 0.125])


def test_local_size_median_triangle():
    # Node 1 has neighbor distances 1 and sqrt(2); even count takes the mean.
    t = delaunay(TRIANGLE)
    s = local_size(t, LocalSizeKind.MEDIAN)
    mid = (1.0 + math.sqrt(2.0)) / 2.0
    assert s == pytest.approx([1.0, mid, mid])


def test_local_size_other_stats():
    t = delaunay(TRIANGLE)
    assert local_size(t, LocalSizeKind.MIN)[1] == pytest.approx(1.0)
    assert local_size(t, LocalSizeKind.MAX)[1] == pytest.approx(math.sqrt(2.0))
    assert local_size(t, LocalSizeKind.SUM)[1] == pytest.approx(1.0 + math.sqrt(2.0))
    assert local_size(t, LocalSizeKind.MEAN)[1] == pytest.approx((1.0 + math.sqrt(2.0)) / 2)


def test_transform_identity_and_log_ratio():
    s = np.asarray([1.0, 2.0, 4.0])
    assert transform(s, TransformKind.IDENTITY) == pytest.approx([1, 2, 4])
    assert transform(s, TransformKind.LOG_RATIO) == pytest.approx(
        [math.log(2), math.log(3), math.log(5)])


def test_transform_rejects_non_positive():
    with pytest.raises(NonPositiveSize):
        transform(np.asarray([1.0, 0.0]), TransformKind.IDENTITY)
    with pytest.raises(NonPositiveSize):
        transform(np.asarray([1.0, -2.0]), TransformKind.SIGMOID)


def test_transforms_preserve_ranking():
    rng = np.random.default_rng(5)
    for _ in range(20):
        s = rng.uniform(0.01, 30.0, 40)
        base = np.argsort(s, kind="stable")
        for kind in TransformKind:
            p = transform(s, kind)
            assert np.array_equal(np.argsort(p, kind="stable"), base), kind


def test_transforms_preserve_ties():
    s = np.asarray([2.0, 1.0, 2.0, 3.0])
    for kind in TransformKind:
        p = transform(s, kind)
        assert p[0] == p[2]
        assert p[1] < p[0] < p[3]


def test_duplicate_points_share_values():
    pts = [(0, 0), (1, 0), (0, 1), (0, 0)]
    t = delaunay(pts)
    for kind in (LocalSizeKind.SIMPLEX, LocalSizeKind.VORONOI, LocalSizeKind.MEDIAN):
        s = local_size(t, kind)
        assert s[3] == s[0]
        assert np.all(s > 0)


def test_positivity_sums():
    # Each triangle is incident to exactly 3 sites, so def (i) sums to three
    # hull areas; the clipped cells tile the hull exactly once.
    t = delaunay(random_points(9, 90))
    total = hull_area(t)
    s1 = local_size(t, LocalSizeKind.SIMPLEX)
    s2 = local_size(t, LocalSizeKind.VORONOI)
    assert float(np.sum(s1)) == pytest.approx(3 * total, rel=1e-9)
    assert float(np.sum(s2)) == pytest.approx(total, rel=1e-9)


def test_downstream_invariance_parent_arrays_identical():
    pts = random_points(21, 70)
    t = delaunay(pts)
    for kind in (LocalSizeKind.SIMPLEX, LocalSizeKind.MEDIAN):
        s = local_size(t, kind)
        parents = [build_it(pts, transform(s, tf)).parent for tf in TransformKind]
        for other in parents[1:]:
            assert np.array_equal(parents[0], other)


def test_compute_potential_defaults():
    t = delaunay(TRIANGLE)
    field = compute_potential(t)
    assert field.kind is LocalSizeKind.SIMPLEX
    assert field.transform is TransformKind.LOG_RATIO
    assert field.p == pytest.approx(np.log1p(field.s / field.s.min()))


def test_complete_graph_fallback_on_collinear_data():
    from dtclust.potential import complete_graph_local_size

    pts = [(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (4.0, 0.0)]
    s = complete_graph_local_size(pts, LocalSizeKind.MEDIAN)
    # Node 0 sees distances (1, 2, 4): median 2.
    assert s[0] == pytest.approx(2.0)
    assert np.all(s > 0)
    # The rescued sizes feed the normal downstream pipeline.
    it = build_it(pts, transform(s, TransformKind.LOG_RATIO))
    assert sum(1 for i in range(4) if it.parent[i] == i) == 1


def test_complete_graph_fallback_duplicates_and_limits():
    from dtclust.potential import complete_graph_local_size

    s = complete_graph_local_size([(0, 0), (3, 0), (0, 0)], LocalSizeKind.MIN)
    assert s[2] == s[0] == pytest.approx(3.0)
    with pytest.raises(ValueError):
        complete_graph_local_size([(0, 0), (1, 0)], LocalSizeKind.SIMPLEX)
    with pytest.raises(NonPositiveSize):
        complete_graph_local_size([(0, 0), (0, 0)], LocalSizeKind.MEDIAN)
