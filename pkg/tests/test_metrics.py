from fractions import Fraction
from math import comb

import numpy as np
import pytest

from dtclust.errors import LengthMismatch
from dtclust.metrics import adjusted_rand_index, metrics, purity


def ari_pair_oracle(a, g):
    """Brute-force pair counting, written before the implementation."""
    n = len(a)
    both = 0       # pairs together in both partitions
    in_a = 0       # pairs together in a
    in_g = 0       # pairs together in g
    for i in range(n):
        for j in range(i + 1, n):
            sa = a[i] == a[j]
            sg = g[i] == g[j]
            both += sa and sg
            in_a += sa
            in_g += sg
    total = comb(n, 2)
    if total == 0:
        return 1.0
    expected = Fraction(in_a * in_g, total)
    maximum = Fraction(in_a + in_g, 2)
    if maximum == expected:
        return 1.0
    return float((both - expected) / (maximum - expected))


def test_perfect_agreement():
    gt = [0, 0, 1, 1, 2]
    r = metrics(gt, gt)
    assert r.purity == 1.0
    assert r.ari == 1.0
    assert r.k_found == r.k_true == 3


def test_single_cluster_vs_balanced_classes():
    a = [0, 0, 0, 0]
    g = [0, 0, 1, 1]
    assert purity(a, g) == 0.5
    assert adjusted_rand_index(a, g) == 0.0


def test_fixed_six_point_contingency():
    # Frozen from the pair-counting oracle above.
    a = [0, 0, 1, 1, 2, 2]
    g = [0, 0, 0, 1, 1, 1]
    assert adjusted_rand_index(a, g) == ari_pair_oracle(a, g)
    assert adjusted_rand_index(a, g) == pytest.approx(0.24242424242424243)
    assert purity(a, g) == pytest.approx(5 / 6)


def test_oracle_equivalence_exact_small():
    rng = np.random.default_rng(17)
    for _ in range(300):
        n = int(rng.integers(1, 11))
        a = rng.integers(0, 4, n)
        g = rng.integers(0, 4, n)
        assert adjusted_rand_index(a, g) == ari_pair_oracle(list(a), list(g))


def test_label_permutation_invariance():
    a = [0, 0, 1, 1, 2, 2, 2]
    g = [1, 1, 2, 2, 0, 0, 0]
    swapped = [2, 2, 0, 0, 1, 1, 1]
    assert adjusted_rand_index(a, g) == adjusted_rand_index(swapped, g)
    assert adjusted_rand_index(a, g) == 1.0


def test_trivial_partitions():
    assert adjusted_rand_index([0, 1, 2], [0, 1, 2]) == 1.0   # all singletons
    assert adjusted_rand_index([0, 0, 0], [0, 0, 0]) == 1.0   # one block
    assert adjusted_rand_index([5], [0]) == 1.0


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        metrics([0, 1], [0])
    with pytest.raises(LengthMismatch):
        purity([0], [0, 1])
    with pytest.raises(LengthMismatch):
        adjusted_rand_index([0], [0, 1])


def test_purity_one_iff_single_class_clusters():
    a = [0, 0, 1, 1, 1]
    g = [0, 0, 1, 1, 2]
    assert purity(a, g) < 1.0
    g2 = [1, 1, 0, 0, 0]
    assert purity(a, g2) == 1.0
