"""
Cyclic Latin rectangles and incidence matrices
==============================================

A cyclic Latin rectangle repeats its first row, rotated left by ``rot`` more
positions on every new row.  Its incidence matrix marks which values sit in
each column.
"""

import numpy as np

from quasiortho import build_cyclic, incidence, random_permutation
from quasiortho.latin import supports_to_dense
from quasiortho.oracle import is_orthogonal

L = build_cyclic([6, 5, 4, 3, 1, 7, 0, 2], k=3, rot=2)
print(np.array(L.rows()))

M = incidence(L)
print("column supports:", M.columns)
print(M.to_array())

# Every row and column holds exactly k ones.
print("column weights", M.column_weights(), "row weights", M.row_weights())

# For (8, 3, 2) the incidence matrix is orthogonal over F2 for any first row.
for seed in range(5):
    Mi = incidence(build_cyclic(random_permutation(8, seed), 3, 2))
    print(f"seed {seed}: orthogonal = {is_orthogonal(supports_to_dense(Mi))}")
