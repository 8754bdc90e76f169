#!/usr/bin/env python3
"""Log-log strong-error curves from an `osc-trig strong-error` CSV.

Development helper only:  python3 scripts/plot_errors.py errors.csv [-o out.png] [--velocity]
"""
import argparse
import csv
from collections import defaultdict

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("csv")
    ap.add_argument("-o", "--output", default="errors.png")
    ap.add_argument("--velocity", action="store_true", help="plot err_v instead of err_x")
    args = ap.parse_args()

    col, ci = ("err_v", "ci_v") if args.velocity else ("err_x", "ci_x")
    curves = defaultdict(list)
    with open(args.csv, newline="") as f:
        for row in csv.DictReader(f):
            key = (row["method"], row["omega"])
            curves[key].append((float(row["h"]), float(row[col]), float(row[ci])))

    fig, ax = plt.subplots(figsize=(6, 4.5))
    for (method, omega), pts in sorted(curves.items()):
        pts.sort()
        h, e, c = zip(*pts)
        ax.errorbar(h, e, yerr=c, marker="o", capsize=3, label=f"{method}, ω={omega}")
    ax.set_xscale("log", base=2)
    ax.set_yscale("log")
    ax.set_xlabel("h")
    ax.set_ylabel(col)
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(args.output, dpi=150)


if __name__ == "__main__":
    main()
