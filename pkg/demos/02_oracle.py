"""
Brute force on a truncated tree
===============================

Build the depth-``d`` truncation of the n-ary tree, list every lower
maximal antichain, and colour each one by hand. Once ``d >= k + 1`` the
census should stop changing and match the recurrence.
"""

from sweepcover import f_table
from sweepcover.tree import (
    build_nary_truncation,
    census_lower_dsc,
    lower_antichains,
    sibling_decomposition,
)

tree = build_nary_truncation(2, 3)
print("nodes:", len(tree), "max depth:", tree.max_depth)

# a few antichains with their sibling groups
for S in list(lower_antichains(tree, max_groups=2, frontier=3))[:5]:
    print(sorted(S), sibling_decomposition(tree, S).sizes)

###############################################################################
# Census at increasing depth. The counts saturate at depth k + 1.

n, k = 3, 4
for depth in range(2, k + 3):
    print(depth, census_lower_dsc(n, k, depth))
print("recurrence:", f_table(n, k)[k])
