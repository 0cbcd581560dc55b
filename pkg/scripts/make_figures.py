#!/usr/bin/env python3
"""Regenerate the five standard figure CSVs (and the scalar report) into out/.

Usage: python scripts/make_figures.py [OUTDIR]

The CSVs feed the plot frontend:  cd frontend && npm run render -- --figure N \
  --csv ../out/figN.csv --out ../out/figN.svg
"""

import pathlib
import sys

from drivencp.cli import main as cli_main


def run(outdir: str = "out") -> int:
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    for fig in (1, 2, 3, 4, 5):
        rc = cli_main(["potential", "--figure", str(fig), "--out", str(out / f"fig{fig}.csv")])
        if rc != 0:
            return rc
        print(f"wrote {out / f'fig{fig}.csv'}")
    # state trajectory behind figure 4, in the dynamics schema
    rc = cli_main(["dynamics", "--figure", "4", "--out", str(out / "fig4_dynamics.csv")])
    if rc != 0:
        return rc
    print(f"wrote {out / 'fig4_dynamics.csv'}")
    return 0


if __name__ == "__main__":
    raise SystemExit(run(sys.argv[1] if len(sys.argv) > 1 else "out"))
