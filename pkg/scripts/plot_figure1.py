#!/usr/bin/env python3
"""Emit the 2-D solution surface on the 15x15 grid; render a PNG when matplotlib is around."""

import pathlib
import sys

import numpy as np

from liealg.bvp import format_surface, solve_hyperbolic
from liealg.partitions import uniform_partition


def main():
    out_dir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path("results")
    out_dir.mkdir(parents=True, exist_ok=True)
    n1 = n2 = 15
    report = solve_hyperbolic(n1, n2)
    ps = [uniform_partition(-1, 1, n1), uniform_partition(-1, 1, n2)]
    data_path = out_dir / "figure1.dat"
    data_path.write_text(format_surface(report, ps))
    print(f"wrote {data_path}  (Emax={report.error_max:.3e}, Eavg={report.error_avg:.3e})")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed; skipped PNG render")
        return 0

    grid = report.u_sigma.reshape(n2 + 1, n1 + 1)
    xs, ys = np.meshgrid(ps[0].nodes, ps[1].nodes)
    fig = plt.figure(figsize=(7, 5))
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(xs, ys, grid, cmap="viridis")
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    ax.set_zlabel("u")
    png_path = out_dir / "figure1.png"
    fig.savefig(png_path, dpi=150, bbox_inches="tight")
    print(f"wrote {png_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
