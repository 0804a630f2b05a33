"""Clustering agreement metrics: purity and the adjusted Rand index.

Both are computed in exact rational arithmetic and converted to float at
the end, so results are reproducible to the bit and comparable against a
pair-counting oracle without tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import LengthMismatch


@dataclass
class MetricReport:
    purity: float
    ari: float
    k_found: int
    k_true: int


def _contingency(assignment, ground_truth):
    table = {}
    for a, g in zip(assignment, ground_truth):
        key = (int(a), int(g))
        table[key] = table.get(key, 0) + 1
    return table


def purity(assignment, ground_truth) -> float:
    """Fraction of points in the majority class of their own cluster."""
    a = np.asarray(assignment)
    g = np.asarray(ground_truth)
    if len(a) != len(g):
        raise LengthMismatch(f"{len(a)} assignments vs {len(g)} truths")
    table = _contingency(a, g)
    best = {}
    for (c, _t), count in table.items():
        best[c] = max(best.get(c, 0), count)
    return float(Fraction(sum(best.values()), len(a)))


def adjusted_rand_index(assignment, ground_truth) -> float:
    """Pair-counting partition agreement with expected-index correction."""
    a = np.asarray(assignment)
    g = np.asarray(ground_truth)
    if len(a) != len(g):
        raise LengthMismatch(f"{len(a)} assignments vs {len(g)} truths")
    n = len(a)
    table = _contingency(a, g)
    sum_cells = sum(comb(c, 2) for c in table.values())
    row = {}
    col = {}
    for (i, j), c in table.items():
        row[i] = row.get(i, 0) + c
        col[j] = col.get(j, 0) + c
    sum_rows = sum(comb(c, 2) for c in row.values())
    sum_cols = sum(comb(c, 2) for c in col.values())
    total = comb(n, 2)
    if total == 0:
        return 1.0
    expected = Fraction(sum_rows * sum_cols, total)
    maximum = Fraction(sum_rows + sum_cols, 2)
    if maximum == expected:
        # Both partitions trivial in the same way (all-singletons or one block).
        return 1.0
    return float((sum_cells - expected) / (maximum - expected))


def metrics(assignment, ground_truth) -> MetricReport:
    """Purity, ARI, and cluster counts for an assignment vs the ground truth."""
    a = np.asarray(assignment)
    g = np.asarray(ground_truth)
    if len(a) != len(g):
        raise LengthMismatch(f"{len(a)} assignments vs {len(g)} truths")
    return MetricReport(purity=purity(a, g),
                        ari=adjusted_rand_index(a, g),
                        k_found=len(np.unique(a)),
                        k_true=len(np.unique(g)))
