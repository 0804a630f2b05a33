"""Point, label, and ground-truth file handling.

Point files hold rows of two numeric fields (x y) or three (x y class),
comma- or whitespace-delimited; row order defines node indices.  A class
column becomes a dense ground truth.  Label files hold "index,label" rows.
"""

from __future__ import annotations

import numpy as np

from .errors import ClusterTooSmall, DimensionError, DuplicateIndex, ParseError


def _split_row(line):
    if "," in line:
        return [f.strip() for f in line.split(",")]
    return line.split()


def load_points(path, header=False):
    """Read a point file; returns (points, ground_truth or None).

    Class ids are densified in order of first appearance.  Raises
    ParseError for non-numeric fields and DimensionError when a row's
    field count differs from the first data row's.
    """
    xs, ys, classes = [], [], []
    width = None
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            if header and line_no == 1:
                continue
            line = raw.strip()
            if not line:
                continue
            fields = _split_row(line)
            if width is None:
                if len(fields) not in (2, 3):
                    raise DimensionError(path, line_no,
                                         f"expected 2 or 3 fields, got {len(fields)}")
                width = len(fields)
            elif len(fields) != width:
                raise DimensionError(path, line_no,
                                     f"expected {width} fields, got {len(fields)}")
            try:
                xs.append(float(fields[0]))
                ys.append(float(fields[1]))
            except ValueError:
                raise ParseError(path, line_no, f"non-numeric coordinate in {line!r}")
            if width == 3:
                classes.append(fields[2])
    points = np.column_stack([xs, ys]) if xs else np.zeros((0, 2))
    if width != 3:
        return points, None
    dense = {}
    gt = np.empty(len(classes), dtype=np.intp)
    for i, c in enumerate(classes):
        if c not in dense:
            dense[c] = len(dense)
        gt[i] = dense[c]
    return points, gt


def save_points(path, points, ground_truth=None):
    """Write a point file that load_points reads back identically."""
    points = np.asarray(points, dtype=np.float64)
    with open(path, "w", encoding="utf-8") as fh:
        for i in range(len(points)):
            row = f"{float(points[i, 0])!r},{float(points[i, 1])!r}"
            if ground_truth is not None:
                row += f",{int(ground_truth[i])}"
            fh.write(row + "\n")


def load_labels(path):
    """Read a partial label file of "index,label" rows into a dict."""
    labels = {}
    with open(path, "r", encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line:
                continue
            fields = _split_row(line)
            if len(fields) != 2:
                raise ParseError(path, line_no,
                                 f"expected 'index,label', got {line!r}")
            try:
                idx = int(fields[0])
            except ValueError:
                raise ParseError(path, line_no, f"non-integer index in {line!r}")
            if idx in labels:
                raise DuplicateIndex(f"{path}:{line_no}: node {idx} labeled twice")
            labels[idx] = fields[1]
    return labels


def save_labels(path, labels):
    with open(path, "w", encoding="utf-8") as fh:
        for idx in sorted(labels):
            fh.write(f"{idx},{labels[idx]}\n")


def sample_labels(ground_truth, per_cluster, seed):
    """Deterministically sample `per_cluster` labeled nodes from each true cluster.

    The label kind is the stringified class id.  Raises ClusterTooSmall if
    any class has fewer members than requested.
    """
    gt = np.asarray(ground_truth, dtype=np.intp)
    rng = np.random.default_rng(seed)
    labels = {}
    for c in np.unique(gt):
        members = np.flatnonzero(gt == c)
        if len(members) < per_cluster:
            raise ClusterTooSmall(
                f"class {c} has {len(members)} members, need {per_cluster}")
        chosen = rng.choice(members, size=per_cluster, replace=False)
        for idx in sorted(int(v) for v in chosen):
            labels[idx] = str(int(c))
    return labels
