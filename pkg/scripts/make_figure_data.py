#!/usr/bin/env python3
"""Generate the figure-grade CSV data sets.

Runs the CLI sweeps behind the two overlap-vs-field figures (odd and even
chains) and the two convergence tables, writing versioned CSVs into data/.
The plotting package consumes these files through the CSV contract only.

    python3 scripts/make_figure_data.py [--outdir data] [--fast]

--fast shrinks grids and lengths for a quick smoke run.
"""

import argparse
import pathlib
import subprocess
import sys
import time


def run(outdir: pathlib.Path, name: str, args: list[str]) -> None:
    out = outdir / name
    cmd = [sys.executable, "-m", "xxz_overlap.cli", *args, "--out", str(out)]
    t0 = time.time()
    print(f"-> {name}", flush=True)
    res = subprocess.run(cmd)
    if res.returncode != 0:
        sys.exit(f"{name} failed with exit code {res.returncode}")
    print(f"   done in {time.time() - t0:.0f}s")


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--outdir", default="data")
    ap.add_argument("--fast", action="store_true")
    opts = ap.parse_args()
    outdir = pathlib.Path(opts.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    if opts.fast:
        odd_L, even_L, even_extra, conv = "9", "8", "10", "8,10"
        step = "0.5"
    else:
        odd_L, even_L, even_extra, conv = "13", "12", "18", "8,10,12,14"
        step = "0.25"

    # odd chain, swept second left field: vanishing plateau above -h+
    run(outdir, "fig_odd_sweep.csv", [
        "sweep", "--L", odd_L, "--zeta", "1.8", "--h-plus=-1",
        "--h1-minus", "0", "--grid=-3.0:3.0:" + step, "--ed"])

    # even chain, all-real regime: smooth curve below the first critical field
    run(outdir, "fig_even_sweep.csv", [
        "sweep", "--L", even_L, "--zeta", "1.5", "--h-plus", "2",
        "--h1-minus=-1", "--grid=-3.0:1.3:" + step, "--ed",
        "--lengths", f"{even_L},{even_extra}"])

    # convergence tables for the two appendix configurations
    run(outdir, "converge_a.csv", [
        "converge", "--L", "8", "--zeta", "1.5", "--h-plus", "2",
        "--h1-minus=-1", "--h2-minus", "0", "--lengths", conv, "--ed"])
    run(outdir, "converge_b.csv", [
        "converge", "--L", "8", "--zeta", "1.8", "--h-plus", "0",
        "--h1-minus", "1", "--h2-minus", "0.5", "--lengths", conv, "--ed"])


if __name__ == "__main__":
    main()
