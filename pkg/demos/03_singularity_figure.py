"""
Growth constants and the convergence figure
===========================================

Locate the dominant square-root singularity ``R_n`` of the generating
function, then compare the exact counts with ``C_n k^{-3/2} D_n^k``.
"""

import sys

import numpy as np

from sweepcover.output import figure_svg
from sweepcover.singularity import asymptotic_table, crossing_k, solve_singularity

for n in range(2, 9):
    rep = solve_singularity(n)
    print(f"n={n}  D={rep.D:.10f}  C={rep.C:.10f}  residual={rep.residual_norm:.1e}")

###############################################################################
# For n = 2 everything is explicit: R = 1/8 and C = 1/(4 sqrt(pi)).

rep = solve_singularity(2)
rows = asymptotic_table(2, 300, rep)
ratio = np.array([r.ratio for r in rows])
print("ratio at k=300:", ratio[-1], "target:", 1 / (4 * np.sqrt(np.pi)))
print("k-th root first exceeds 2 at k =", crossing_k(rows, 2))

# relative error decays roughly like 1/k
for k in (10, 30, 100, 300):
    print(k, abs(ratio[k - 1] / rep.C - 1))

###############################################################################
# Write the two-panel figure; pass a path to keep it.

svg = figure_svg(rows, n=2, D=rep.D, C=rep.C)
if len(sys.argv) > 1:
    with open(sys.argv[1], "w") as fh:
        fh.write(svg)
else:
    print(svg[:200], "...")
