"""Structured-text (JSON) documents: in-trees, triangulations, reports.

All writers emit canonical JSON (sorted keys, fixed separators, trailing
newline), so identical inputs round-trip to byte-identical files.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import SchemaError
from .intree import InTree
from .metrics import MetricReport


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def it_export(it: InTree) -> str:
    """Serialize an in-tree with fields n, parent, potential, edge_length,
    cut_flags."""
    doc = {
        "schema": "intree/v1",
        "n": int(it.n),
        "parent": [int(v) for v in it.parent],
        "potential": [float(v) for v in it.potential],
        "edge_length": [float(v) for v in it.edge_length],
        "cut_flags": [bool(v) for v in it.cut_flags],
    }
    return dumps_canonical(doc)


def it_import(text: str) -> InTree:
    """Parse and validate an in-tree document; import(export(x)) == x."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"not valid JSON: {e}")
    if not isinstance(doc, dict) or doc.get("schema") != "intree/v1":
        raise SchemaError("missing or unknown schema marker")
    try:
        n = int(doc["n"])
        parent = [int(v) for v in doc["parent"]]
        potential = [float(v) for v in doc["potential"]]
        edge_length = [float(v) for v in doc["edge_length"]]
        cut_flags = [bool(v) for v in doc["cut_flags"]]
    except (KeyError, TypeError, ValueError) as e:
        raise SchemaError(f"malformed field: {e}")
    for name, arr in (("parent", parent), ("potential", potential),
                      ("edge_length", edge_length), ("cut_flags", cut_flags)):
        if len(arr) != n:
            raise SchemaError(f"{name} has {len(arr)} entries, expected n={n}")
    for v in parent:
        if v < 0 or v >= n:
            raise SchemaError(f"parent index {v} out of range")

    # Acyclicity: every node must reach a root (self-parent or cut flag).
    state = [0] * n  # 0 unvisited, 1 on current path, 2 validated
    for start in range(n):
        path = []
        i = start
        while True:
            if state[i] == 2:
                break
            if state[i] == 1:
                raise SchemaError("parent pointers contain a cycle")
            state[i] = 1
            path.append(i)
            if parent[i] == i or cut_flags[i]:
                break
            i = parent[i]
        for v in path:
            state[v] = 2
    return InTree(parent=np.asarray(parent, dtype=np.intp),
                  edge_length=np.asarray(edge_length),
                  potential=np.asarray(potential),
                  cut_flags=np.asarray(cut_flags, dtype=bool))


def triangulation_export(tri) -> str:
    """Debug export: points, triangle index triples, hull indices."""
    doc = {
        "schema": "triangulation/v1",
        "points": [[float(x), float(y)] for x, y in tri.points],
        "triangles": [[int(a), int(b), int(c)] for a, b, c in tri.triangles],
        "hull": [int(v) for v in tri.hull],
    }
    return dumps_canonical(doc)


def potential_export(field) -> str:
    doc = {
        "schema": "potential/v1",
        "kind": field.kind.value,
        "transform": field.transform.value,
        "s": [float(v) for v in field.s],
        "p": [float(v) for v in field.p],
    }
    return dumps_canonical(doc)


def report_export(report: MetricReport) -> str:
    doc = {
        "schema": "metrics/v1",
        "purity": report.purity,
        "ari": report.ari,
        "k_found": report.k_found,
        "k_true": report.k_true,
    }
    return dumps_canonical(doc)


def clusters_export(assignment) -> str:
    """Cluster file: one "index,cluster_id" row per point."""
    ids = assignment.cluster_id if hasattr(assignment, "cluster_id") else assignment
    return "".join(f"{i},{int(c)}\n" for i, c in enumerate(ids))


def clusters_import(text: str):
    ids = {}
    for line_no, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = line.split(",")
        if len(fields) != 2:
            raise SchemaError(f"line {line_no}: expected 'index,cluster_id'")
        try:
            ids[int(fields[0])] = int(fields[1])
        except ValueError:
            raise SchemaError(f"line {line_no}: non-integer field")
    if sorted(ids) != list(range(len(ids))):
        raise SchemaError("cluster file indices are not dense from 0")
    return np.asarray([ids[i] for i in range(len(ids))], dtype=np.intp)
