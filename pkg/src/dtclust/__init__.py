"""Nonparametric 2D clustering from Delaunay/Voronoi local size.

Pipeline: tessellate the points, turn each point's local size into a
potential, build an in-tree by nearest-neighbor descent, and cut the
tree's inter-cluster edges either semi-supervised or via the decision
graph.
"""

from .cutting import (CutResult, DecisionGraph, decision_graph, dg_auto_cut,
                      dg_manual_cut, gamma_scores, ss_divisive_cut,
                      top_gamma_nodes)
from .dataio import (load_labels, load_points, sample_labels, save_labels,
                     save_points)
from .geometry import (Triangulation, brute_force_delaunay, convex_hull,
                       delaunay, hull_area, triangle_area, triangle_areas,
                       validate_triangulation, voronoi_cell_areas)
from .intree import (ClusterAssignment, InTree, assign_clusters, build_it,
                     delaunay_descent)
from .metrics import MetricReport, adjusted_rand_index, metrics, purity
from .potential import (LocalSizeKind, PotentialField, TransformKind,
                        complete_graph_local_size, compute_potential,
                        local_size, transform)
from .svg import render_svg

__version__ = "0.1.0"
