"""
Generating and inverting a quasi-orthogonal matrix
==================================================

Build a random 16 x 16 orthogonal binary matrix, replace 0/1 by two field
elements, and check that the inverse is the transpose with a second pair.
"""

import time

import numpy as np

from quasiortho import (
    GeneratorConfig,
    inverse_pair,
    make_field,
    quasi_inverse,
    random_orthogonal_binary_matrix,
    substitute,
    verify_quasi_inverse,
    weight_stats,
)
from quasiortho.bench import run_bench

F = make_field(4, 0x19)
P = random_orthogonal_binary_matrix(GeneratorConfig(16, iterations=6, seed=2024))
print(P.to_array())
print("column weights:", weight_stats(P))

Q = substitute(P, 7, 13, F)
R = quasi_inverse(Q)
print("inverse pair for (7, 13):", inverse_pair(7, 13, F))
print(np.array(Q.dense().to_lists()))
print(np.array(R.dense().to_lists()))
print("Q @ R == I:", verify_quasi_inverse(Q, R))

# Column weight settles near n/2 after six rounds.
for rounds in (1, 2, 3, 6):
    means = [
        weight_stats(random_orthogonal_binary_matrix(GeneratorConfig(64, rounds, seed=s))).mean
        for s in range(50)
    ]
    print(f"{rounds} rounds: mean column weight {np.mean(means):.1f} of 64")

t0 = time.perf_counter()
random_orthogonal_binary_matrix(GeneratorConfig(256, seed=0))
print(f"one 256 x 256 matrix: {(time.perf_counter() - t0) * 1e3:.1f} ms")
print(run_bench(64, reps=5).format())
