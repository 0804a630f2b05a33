"""Command-line pipeline: tessellate, potential, in-tree, cut, evaluate, plot, serve.

Each stage is its own subcommand so the pipeline can be staged through
exported documents; `run` composes them end to end.  Exit codes: 0 ok,
2 input error, 3 degenerate geometry, 4 cutter error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import itdoc, svg
from .cutting import decision_graph, dg_auto_cut, dg_manual_cut, ss_divisive_cut
from .dataio import load_labels, load_points
from .errors import (DegenerateInput, DimensionError, DuplicateIndex,
                     InsufficientLabels, InvalidCutNode, KTooLarge, ParseError,
                     SchemaError)
from .geometry import delaunay
from .intree import build_it
from .metrics import metrics
from .potential import LocalSizeKind, TransformKind, compute_potential

SVG_VIEWS = ("delaunay_potential", "it_potential", "clusters", "decision_graph")


def _add_points_args(ap):
    ap.add_argument("--points", required=True, help="point file (x,y[,class] rows)")
    ap.add_argument("--header", action="store_true", help="skip the first line")


def _add_pipeline_args(ap):
    ap.add_argument("--sdef", default="simplex",
                    choices=[k.value for k in LocalSizeKind])
    ap.add_argument("--transform", default="log-ratio",
                    choices=[t.value for t in TransformKind])


def _add_cut_args(ap):
    ap.add_argument("--cut", required=True, choices=["ss", "dg-auto", "dg-manual"])
    ap.add_argument("--k", type=int, help="cluster count for dg-auto")
    ap.add_argument("--nodes", help="comma-separated cut nodes for dg-manual")
    ap.add_argument("--labels", help="label file for ss (index,label rows)")


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _outpath(args, name):
    os.makedirs(args.out_dir, exist_ok=True)
    return os.path.join(args.out_dir, name)


def _build_field(points, args):
    tri = delaunay(points)
    field = compute_potential(tri, LocalSizeKind(args.sdef),
                              TransformKind(args.transform))
    return tri, field


def _apply_cutter(it, args):
    if args.cut == "ss":
        if not args.labels:
            raise ParseError("<args>", 0, "--cut ss requires --labels")
        return ss_divisive_cut(it, load_labels(args.labels))
    if args.cut == "dg-auto":
        if args.k is None:
            raise ParseError("<args>", 0, "--cut dg-auto requires --k")
        return dg_auto_cut(it, args.k)
    nodes = [int(v) for v in (args.nodes or "").split(",") if v.strip()]
    return dg_manual_cut(it, nodes)


def cmd_triangulate(args):
    points, _gt = load_points(args.points, header=args.header)
    tri = delaunay(points)
    _write(_outpath(args, "triangulation.json"), itdoc.triangulation_export(tri))
    return 0


def cmd_potential(args):
    points, _gt = load_points(args.points, header=args.header)
    _tri, field = _build_field(points, args)
    _write(_outpath(args, "potential.json"), itdoc.potential_export(field))
    return 0


def cmd_tree(args):
    points, _gt = load_points(args.points, header=args.header)
    _tri, field = _build_field(points, args)
    it = build_it(points, field.p)
    _write(_outpath(args, "it.json"), itdoc.it_export(it))
    return 0


def cmd_cut(args):
    with open(args.it, "r", encoding="utf-8") as fh:
        it = itdoc.it_import(fh.read())
    result = _apply_cutter(it, args)
    _write(_outpath(args, "clusters.csv"), itdoc.clusters_export(result.assignment))
    _write(_outpath(args, "it_cut.json"),
           itdoc.it_export(it.with_cuts(result.cut_nodes)))
    return 0


def cmd_eval(args):
    points, gt = load_points(args.points, header=args.header)
    if gt is None:
        raise ParseError(args.points, 0, "no class column; cannot evaluate")
    with open(args.clusters, "r", encoding="utf-8") as fh:
        assignment = itdoc.clusters_import(fh.read())
    report = metrics(assignment, gt)
    _write(_outpath(args, "report.json"), itdoc.report_export(report))
    return 0


def _render_views(args, points, tri, field, it, assignment):
    views = [v.strip() for v in (args.svg or "").split(",") if v.strip()]
    for view in views:
        if view not in SVG_VIEWS:
            raise ParseError("<args>", 0, f"unknown view {view!r}")
        if view == "delaunay_potential":
            doc = svg.render_svg(view, tri=tri, potential=field.p)
        elif view == "it_potential":
            doc = svg.render_svg(view, points=points, it=it)
        elif view == "clusters":
            if assignment is None:
                raise ParseError("<args>", 0, "clusters view needs cluster ids")
            doc = svg.render_svg(view, points=points, assignment=assignment)
        else:
            doc = svg.render_svg(view, dg=decision_graph(it))
        _write(_outpath(args, f"{view}.svg"), doc)


def cmd_plot(args):
    points, _gt = load_points(args.points, header=args.header)
    tri, field = _build_field(points, args)
    it = build_it(points, field.p)
    assignment = None
    if args.clusters:
        with open(args.clusters, "r", encoding="utf-8") as fh:
            assignment = itdoc.clusters_import(fh.read())
    _render_views(args, points, tri, field, it, assignment)
    return 0


def cmd_run(args):
    points, gt = load_points(args.points, header=args.header)
    tri, field = _build_field(points, args)
    it = build_it(points, field.p)
    _write(_outpath(args, "it.json"), itdoc.it_export(it))
    result = _apply_cutter(it, args)
    _write(_outpath(args, "clusters.csv"), itdoc.clusters_export(result.assignment))
    _write(_outpath(args, "it_cut.json"),
           itdoc.it_export(it.with_cuts(result.cut_nodes)))
    if gt is not None:
        report = metrics(result.assignment.cluster_id, gt)
        _write(_outpath(args, "report.json"), itdoc.report_export(report))
    if args.svg:
        _render_views(args, points, tri, field, it, result.assignment)
    return 0


def cmd_serve(args):
    from .server import DgSession, serve

    points, _gt = load_points(args.points, header=args.header)
    session = DgSession.from_pipeline(points, LocalSizeKind(args.sdef),
                                      TransformKind(args.transform))
    serve(session, host="127.0.0.1", port=args.port, assets_dir=args.assets)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cluster",
        description="Tessellation-potential in-tree clustering pipeline")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("triangulate", help="write the triangulation debug document")
    _add_points_args(p)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(fn=cmd_triangulate)

    p = sub.add_parser("potential", help="write local sizes and potentials")
    _add_points_args(p)
    _add_pipeline_args(p)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(fn=cmd_potential)

    p = sub.add_parser("tree", help="write the in-tree document")
    _add_points_args(p)
    _add_pipeline_args(p)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(fn=cmd_tree)

    p = sub.add_parser("cut", help="cut an exported in-tree into clusters")
    p.add_argument("--it", required=True, help="in-tree document from `tree`")
    _add_cut_args(p)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(fn=cmd_cut)

    p = sub.add_parser("eval", help="score a clusters file against ground truth")
    _add_points_args(p)
    p.add_argument("--clusters", required=True)
    p.add_argument("--out-dir", default=".")
    p.set_defaults(fn=cmd_eval)

    p = sub.add_parser("plot", help="render SVG views")
    _add_points_args(p)
    _add_pipeline_args(p)
    p.add_argument("--clusters", help="clusters file for the clusters view")
    p.add_argument("--svg", required=True,
                   help=f"comma-separated views from {SVG_VIEWS}")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(fn=cmd_plot)

    p = sub.add_parser("run", help="full pipeline: tessellate, descend, cut, score")
    _add_points_args(p)
    _add_pipeline_args(p)
    _add_cut_args(p)
    p.add_argument("--svg", help=f"comma-separated views from {SVG_VIEWS}")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for any sampled inputs (the core pipeline is "
                        "deterministic and ignores it)")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(fn=cmd_run)

    p = sub.add_parser("serve", help="serve the interactive cutting UI")
    _add_points_args(p)
    _add_pipeline_args(p)
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--assets", help="directory of built UI assets")
    p.set_defaults(fn=cmd_serve)

    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ParseError, DimensionError, DuplicateIndex, SchemaError,
            FileNotFoundError, IsADirectoryError) as e:
        print(f"cluster: input error: {e}", file=sys.stderr)
        return 2
    except DegenerateInput as e:
        print(f"cluster: degenerate geometry: {e}", file=sys.stderr)
        return 3
    except (KTooLarge, InvalidCutNode, InsufficientLabels) as e:
        print(f"cluster: cutter error: {e}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
