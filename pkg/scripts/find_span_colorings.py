#!/usr/bin/env python3
"""Find, verify, save, and render periodic colorings that attain the
closed-form span for even l.

Usage: python scripts/find_span_colorings.py [--l 8 10 12] [--outdir colorings]
"""

import argparse
import pathlib
import sys
import time

from hexspan import (
    materialize_window,
    search_periodic,
    span_even,
    verify_lattice,
    verify_window,
    write_coloring,
)
from hexspan.render import render_svg


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--l", type=int, nargs="+", default=[8, 10, 12])
    ap.add_argument("--outdir", default="colorings")
    args = ap.parse_args()

    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    bad = 0
    for l in args.l:
        target = span_even(l).span
        t0 = time.time()
        result = search_periodic(l)
        dt = time.time() - t0
        coloring = result.coloring
        if coloring is None:
            print(f"l={l}: no {target}-color periodic coloring found "
                  f"({result.lattices_tried} lattices, {dt:.1f}s)")
            bad += 1
            continue
        periodic_ok = verify_lattice(coloring).valid
        window_ok = verify_window(materialize_window(coloring, 3 * l)).valid
        col_path = outdir / f"l{l}.col"
        col_path.write_text(write_coloring(coloring), encoding="utf-8")
        svg_path = outdir / f"l{l}.svg"
        svg_path.write_text(render_svg(coloring), encoding="utf-8")
        print(f"l={l}: {coloring.color_count} colors (target {target}), "
              f"mode {result.mode}, period det {coloring.det}, "
              f"basis {coloring.basis}, verified periodic={periodic_ok} "
              f"window={window_ok}, {dt:.1f}s -> {col_path}, {svg_path}")
        bad += not (periodic_ok and window_ok and coloring.color_count == target)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
