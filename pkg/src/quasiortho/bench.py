"""Timing the support-set generator against an explicit matmul chain."""

from __future__ import annotations

import time
from typing import NamedTuple

from .latin import make_rng, supports_to_dense
from .oracle import BinaryMatrix, bin_matmul
from .orthogen import (
    DEFAULT_ITERATIONS,
    GeneratorConfig,
    random_incidence_factors,
    random_orthogonal_binary_matrix,
)


class BenchReport(NamedTuple):
    n: int
    reps: int
    support_mean: float  # seconds per matrix
    matmul_mean: float

    @property
    def speedup(self) -> float:
        return self.matmul_mean / self.support_mean

    def format(self) -> str:
        return (
            f"n={self.n} reps={self.reps}\n"
            f"support-set path: {self.support_mean * 1e3:.3f} ms/matrix\n"
            f"naive matmul path: {self.matmul_mean * 1e3:.3f} ms/matrix\n"
            f"speedup: {self.speedup:.1f}x\n"
        )


def generate_via_matmul(cfg: GeneratorConfig, rng=None) -> BinaryMatrix:
    """Same construction, but densify every factor and multiply with the oracle."""
    factors = random_incidence_factors(cfg, rng)
    P = BinaryMatrix.identity(cfg.n)
    for M in factors:
        P = bin_matmul(P, supports_to_dense(M))
    return P


def run_bench(n: int, reps: int = 20, iterations: int = DEFAULT_ITERATIONS, seed: int = 0) -> BenchReport:
    if reps < 1:
        raise ValueError("reps must be >= 1")
    cfg = GeneratorConfig(n, iterations)
    # raises TripletNotFound before any timing
    random_orthogonal_binary_matrix(cfg, make_rng(seed))

    rng = make_rng(seed)
    t0 = time.perf_counter()
    for _ in range(reps):
        random_orthogonal_binary_matrix(cfg, rng)
    support = (time.perf_counter() - t0) / reps

    rng = make_rng(seed)
    t0 = time.perf_counter()
    for _ in range(reps):
        generate_via_matmul(cfg, rng)
    matmul = (time.perf_counter() - t0) / reps
    return BenchReport(n, reps, support, matmul)
