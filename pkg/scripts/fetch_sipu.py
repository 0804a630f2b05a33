#!/usr/bin/env python3
"""Fetch the classic SIPU 2D benchmark files (spiral, Aggregation, flame, s1).

Files are downloaded from the public SIPU dataset collection and are not
vendored in this repository.  The first successful download of each file
records its SHA-256 in fetch_sipu.lock next to this script; later runs
verify against the pinned digests, so a silently changed upstream file is
detected.

Usage: python scripts/fetch_sipu.py [--out-dir data/sipu]

The bundled synthetic datasets (python -m dtclust.datasets) cover the test
suite when these files are unavailable.
"""

import argparse
import hashlib
import json
import os
import sys
import urllib.request

BASE = "http://cs.joensuu.fi/sipu/datasets/"
FILES = ["spiral.txt", "Aggregation.txt", "flame.txt", "s1.txt"]
LOCK = os.path.join(os.path.dirname(os.path.abspath(__file__)), "fetch_sipu.lock")


def load_lock():
    if os.path.exists(LOCK):
        with open(LOCK, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return {}


def save_lock(lock):
    with open(LOCK, "w", encoding="utf-8") as fh:
        json.dump(lock, fh, indent=2, sort_keys=True)
        fh.write("\n")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out-dir", default="data/sipu")
    args = ap.parse_args(argv)
    os.makedirs(args.out_dir, exist_ok=True)
    lock = load_lock()
    failures = 0
    for name in FILES:
        url = BASE + name
        dest = os.path.join(args.out_dir, name)
        try:
            with urllib.request.urlopen(url, timeout=30) as resp:
                data = resp.read()
        except Exception as e:
            print(f"FAIL {name}: {e}", file=sys.stderr)
            failures += 1
            continue
        digest = hashlib.sha256(data).hexdigest()
        pinned = lock.get(name)
        if pinned is None:
            lock[name] = digest
            print(f"ok   {name}: pinned sha256 {digest[:16]}...")
        elif pinned != digest:
            print(f"FAIL {name}: sha256 {digest[:16]}... does not match "
                  f"pinned {pinned[:16]}...", file=sys.stderr)
            failures += 1
            continue
        else:
            print(f"ok   {name}: sha256 verified")
        with open(dest, "wb") as fh:
            fh.write(data)
    save_lock(lock)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
