"""One-off: per-class distance data at complexity 15 for one parameter
cell, saved to npz so averaging conventions can be compared offline."""

import math
import sys
import time

import numpy as np

from lambdatree.coalescent import Beta, ModelContext
from lambdatree.exact import CompressedTables, ExactSolver
from lambdatree.genetree import (
    enumerate_all_genetrees,
    enumerate_reverse_events,
    symmetry_count,
)
from lambdatree.proposals import make_scheme

K = 15
R = float(sys.argv[1]) if len(sys.argv) > 1 else 0.5
ALPHA = float(sys.argv[2]) if len(sys.argv) > 2 else 2.0
OUT = f"scripts/tv15_dump_r{R}_a{ALPHA}.npz"
NAMES = ["gt", "sd", "huw1", "huw2b", "huw2a", "huw2alpha", "huw2beta", "huw15"]


def main():
    t0 = time.time()
    ctx = ModelContext(Beta(ALPHA), K + 1)
    solver = ExactSolver(ctx, R, complexity_limit=K)
    tabs = CompressedTables(ctx, R, K + 1)
    schemes = [make_scheme(n, ctx, R, tables=tabs, solver=solver) for n in NAMES]
    tv = []
    meta = []  # n, s, d, c, p_ordered
    for g in enumerate_all_genetrees(K):
        events = enumerate_reverse_events(g, ctx, R)
        p_here = solver.p_ordered(g)
        opt = np.array(
            [solver.p_ordered(e.target) * e.coefficient / p_here for e in events]
        )
        row = []
        for sch in schemes:
            _, probs, _ = sch.distribution(g, events)
            row.append(0.5 * float(np.abs(opt - probs).sum()))
        tv.append(row)
        meta.append((g.n, g.s, g.d, symmetry_count(g), p_here))
    np.savez_compressed(
        OUT,
        tv=np.array(tv),
        meta=np.array(meta),
        names=np.array(NAMES),
        params=np.array([R, ALPHA]),
    )
    print(f"saved {OUT} after {time.time()-t0:.0f}s")


if __name__ == "__main__":
    main()
