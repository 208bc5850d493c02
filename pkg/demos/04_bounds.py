"""
Binomial run products and their bounds
======================================

Each composition of ``n`` into ``m`` parts of size at least ``k`` gives a
product of runs ``prod_{i=k}^{x} C(i, k)``. Balanced compositions minimise it
and the most lopsided ones maximise it. We also test the closed-form
Stirling-type bounds on the minimum.
"""

import math

from sweepcover.bounds import (
    bounds_case,
    bounds_grid,
    check_schur_extremes,
    powered_composition_closed_form,
    powered_composition_sum,
)

v = check_schur_extremes(9, 3, 2)
print("min", v.min_value, v.min_compositions)
print("max", v.max_value, v.max_compositions)

###############################################################################
# The lower bound holds everywhere on the grid. The upper bound does not
# hold at small parameters; (2, 1, 1) is the smallest failure.

reports = bounds_grid(range(1, 25), range(1, 4), range(1, 5))
print("lower holds:", all(r.lower_holds for r in reports))
for m in range(1, 4):
    for k in range(1, 5):
        ok = [r.n for r in reports if r.m == m and r.k == k and r.upper_holds]
        print(f"m={m} k={k} upper holds for n in", ok[:1] + ok[-1:] if ok else "none")

c = bounds_case(2, 1, 1)
print("(2,1,1): exact", c.min_value, "upper", round(c.upper_bound, 4))

###############################################################################
# Sums of powered compositions have a binomial closed form whose degree
# gives the growth exponent parts*(p+1) - 1.

for parts, p in [(2, 1), (2, 3), (4, 4)]:
    a = powered_composition_sum(parts, p, 400)
    b = powered_composition_closed_form(parts, p, 400)
    print(parts, p, a == b, round(math.log2(a / powered_composition_sum(parts, p, 200)), 3))
