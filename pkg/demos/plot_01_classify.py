"""
Classifying small Cayley tables
===============================

Build a few tables from the catalog, classify them, and look at the
witness that shows the Chein double of S3 is not associative.
"""

import numpy as np

from moufang import catalog, classify

# cyclic groups and S3 are groups
for name in ["Z4", "Z2xZ2", "S3"]:
    print(name, "->", classify(catalog.get(name)).summary())

# doubling S3 gives an order-12 Moufang loop that is not a group
M = catalog.chein_double(catalog.symmetric3())
c = classify(M)
print(c.summary())

g, h, k = c.witness("associative").elements
print(f"({g}*{h})*{k} = {M.mul(M.mul(g, h), k)} but {g}*({h}*{k}) = {M.mul(g, M.mul(h, k))}")

# the table itself is a read-only numpy array
print(M.table.dtype, M.table.shape)
print("every row is a permutation:", all(np.array_equal(np.sort(r), np.arange(12)) for r in M.table))
