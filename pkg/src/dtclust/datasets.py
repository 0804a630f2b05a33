"""Bundled deterministic 2D datasets in the style of the classic SIPU sets.

Each generator is parameter-free and internally seeded, so every call
returns the identical (points, ground_truth) pair.  The real SIPU files
can be fetched with scripts/fetch_sipu.py; these synthetic stand-ins keep
the test suite self-contained.
"""

from __future__ import annotations

import numpy as np

_TAU = 2.0 * np.pi


def _disk(rng, center, radius, n):
    """Uniform samples in a disk (crisp edges keep inter-cluster gaps clean)."""
    theta = rng.uniform(0.0, _TAU, n)
    r = radius * np.sqrt(rng.uniform(0.0, 1.0, n))
    return np.column_stack([center[0] + r * np.cos(theta),
                            center[1] + r * np.sin(theta)])


def make_aggregation():
    """Seven round clusters of varied size, n = 788."""
    rng = np.random.default_rng(20240601)
    blobs = [
        ((1.5, 1.4), 1.00, 170),
        ((2.2, 6.4), 0.95, 140),
        ((5.2, 2.1), 0.90, 128),
        ((5.5, 7.0), 0.90, 110),
        ((8.9, 1.9), 0.85, 95),
        ((9.1, 6.5), 0.85, 85),
        ((7.0, 4.3), 0.72, 60),
    ]
    parts = []
    gt = []
    for cid, (center, radius, n) in enumerate(blobs):
        parts.append(_disk(rng, center, radius, n))
        gt.extend([cid] * n)
    return np.vstack(parts), np.asarray(gt, dtype=np.intp)


def make_flame():
    """A gently arched band with a compact lobe above it, n = 240.

    Both clusters are densest at their centers, so each has one dominant
    descent basin and the only long jump is the one bridging them.
    """
    rng = np.random.default_rng(20240602)
    u = (np.arange(30) + 0.5) / 30.0 * 2.0 - 1.0
    xs = 5.0 + 3.5 * np.sign(u) * np.abs(u) ** 1.45
    ys = (np.arange(5) + 0.5) / 5.0 * 0.9 - 0.45
    gx, gy = np.meshgrid(xs, ys)
    gx = gx.ravel() + rng.uniform(-0.05, 0.05, 150)
    off = gy.ravel() + rng.uniform(-0.05, 0.05, 150)
    band = np.column_stack([gx, 2.6 + 0.7 * np.sin(np.pi * (gx - 1.5) / 7.0) + off])

    # Center-dense sunflower layout for the lobe.
    k = np.arange(90) + 0.5
    r = 1.0 * (k / 90.0) ** 0.68
    th = k * np.pi * (3.0 - np.sqrt(5.0))
    lobe = np.column_stack([5.0 + r * np.cos(th), 6.6 + r * np.sin(th)])
    lobe = lobe + rng.uniform(-0.02, 0.02, (90, 2))

    points = np.vstack([band, lobe])
    gt = np.asarray([0] * 150 + [1] * 90, dtype=np.intp)
    return points, gt


def make_spiral():
    """Three interleaved log-spiral arms, each with a tip clump and a dense
    mid-arm knot, n = 153.

    Uniform-angle sampling makes each arm densest at its inner tip; a tiny
    three-point clump just inside each tip pins the arm's potential minimum
    there, so every arm descends onto its own tip and the tips chain up near
    the origin.  Each knot (a diamond of four points around a fifth at its
    center) sits on its arm one full turn out from the tip: the knot center
    is a deep local-size dip whose long escape jump runs straight down its
    own arm, handing the decision graph big-W/low-P marks that are not
    cluster boundaries.  A slight per-arm radial stagger keeps corresponding
    points of different arms strictly ordered in potential.
    """
    n_body = 44
    r0 = 0.15
    growth = 0.5
    theta_max = 6.8
    knot_theta = _TAU
    parts = []
    gt = []
    for arm in range(3):
        phase = arm * _TAU / 3.0
        theta = np.linspace(0.0, theta_max, n_body)
        # Drop the body point the knot replaces.
        theta = theta[np.abs(theta - knot_theta) > 0.10]
        stagger = 1.0 + 0.013 * arm
        r = r0 * np.exp(growth * theta) * stagger
        ang = theta + phase
        body = np.column_stack([r * np.cos(ang), r * np.sin(ang)])

        tip_r = 0.132 * stagger
        tip_scale = 0.012 + 0.001 * arm
        tip_ang = np.asarray([0.2 + arm + j * _TAU / 3.0 for j in range(3)])
        tip = np.column_stack([tip_r * np.cos(phase) + tip_scale * np.cos(tip_ang),
                               tip_r * np.sin(phase) + tip_scale * np.sin(tip_ang)])

        kr = r0 * np.exp(growth * knot_theta) * stagger
        scale = 0.07 + 0.005 * arm
        spin = 0.4 * arm
        ring = np.asarray([[np.cos(spin + j * _TAU / 4.0),
                            np.sin(spin + j * _TAU / 4.0)] for j in range(4)])
        center = np.asarray([kr * np.cos(phase), kr * np.sin(phase)])
        knot = np.vstack([center, center + scale * ring])

        parts.append(np.vstack([body, tip, knot]))
        gt.extend([arm] * (len(body) + 8))
    return np.vstack(parts), np.asarray(gt, dtype=np.intp)


BUNDLED = {
    "aggregation": make_aggregation,
    "flame": make_flame,
    "spiral": make_spiral,
}


def main(argv=None):
    """Write the bundled datasets as point files with a class column."""
    import argparse
    import os

    from .dataio import save_points

    ap = argparse.ArgumentParser(description=main.__doc__)
    ap.add_argument("--out-dir", default="data")
    args = ap.parse_args(argv)
    os.makedirs(args.out_dir, exist_ok=True)
    for name, gen in BUNDLED.items():
        points, gt = gen()
        path = os.path.join(args.out_dir, f"{name}.txt")
        save_points(path, points, gt)
        print(f"wrote {path} ({len(points)} points)")


if __name__ == "__main__":
    main()
