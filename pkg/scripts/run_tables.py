#!/usr/bin/env python3
"""Run both boundary-value experiments and the audit suite; write CSVs to results/."""

import pathlib
import sys

from liealg.cli import RunConfig, run


def main():
    out_dir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path("results")
    out_dir.mkdir(parents=True, exist_ok=True)
    worst = 0
    for command in ("table1", "table3", "rank-audit"):
        status, text = run(RunConfig(command=command))
        path = out_dir / f"{command.replace('-', '_')}.csv"
        path.write_text(text)
        print(f"wrote {path} ({len(text.splitlines()) - 1} rows, exit {status})")
        worst = max(worst, status)
    return worst


if __name__ == "__main__":
    sys.exit(main())
