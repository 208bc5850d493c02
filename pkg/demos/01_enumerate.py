"""
Counting decorated sweep covers
===============================

Two independent exact engines produce the counts ``f_n(k)``: a
convolution recurrence and the fixed point of the generating-function
equation. They must agree coefficient for coefficient.
"""

from sweepcover import f_table, solve_ogf

# binary trees first; the first few values are small enough to eyeball
table = f_table(2, 10)
print("n=2:", list(table.values[1:]))

# the series engine reaches the same numbers by a different route
series = solve_ogf(2, 10)
print("series agrees:", series.coefficients == list(table.values))

###############################################################################
# Wider trees grow faster. Print the first eight counts for n = 2..5.

for n in range(2, 6):
    print(n, list(f_table(n, 8).values[1:]))

###############################################################################
# The numbers get large quickly, and all arithmetic stays exact.

big = f_table(3, 200)[200]
print("f_3(200) has", len(str(big)), "digits")
