"""
Searching for (n, k, rot) triplets
==================================

For even n, look for the smallest odd k (and then the smallest rot) whose
cyclic Latin rectangles always give orthogonal incidence matrices.
"""

from collections import Counter

from quasiortho import find_params, search_table

table = search_table(8, 256)
print(f"{len(table)} dimensions between 8 and 256 have a triplet")
for t in table[:8]:
    print(t)

print("k used:", dict(sorted(Counter(t.k for t in table).items())))

# Dimensions n = 2p for a prime p have no triplet at all.
missing = [n for n in range(8, 257, 2) if find_params(n) is None]
print("no triplet:", missing)
