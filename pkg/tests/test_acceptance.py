"""Exit criteria for the build, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get a PASS/FAIL line per criterion
in the terminal summary.
"""

import itertools
import statistics
import time

import paper_data as pd
from quasiortho.bench import run_bench
from quasiortho.gf2m import make_field
from quasiortho.latin import (
    SupportSetMatrix,
    build_cyclic,
    incidence,
    make_rng,
    random_permutation,
    supports_to_dense,
)
from quasiortho.errors import NotLatin
from quasiortho.oracle import BinaryMatrix, bin_matmul, is_orthogonal
from quasiortho.orthogen import (
    GeneratorConfig,
    find_params,
    random_orthogonal_binary_matrix,
    search_table,
    support_product,
    weight_stats,
)
from quasiortho.quasi import inverse_pair, quasi_inverse, substitute, verify_quasi_inverse

F16 = make_field(pd.FIELD_M, pd.FIELD_POLY)
SMALL_TRIPLETS = [t for t in pd.TABLE if t[0] <= 64]


def test_1_table_snapshot(criterion):
    find_params.cache_clear()
    t0 = time.perf_counter()
    table = search_table(8, 256)
    elapsed = time.perf_counter() - t0
    ok = [tuple(t) for t in table] == pd.TABLE and len(table) == 96 and elapsed < 10
    assert criterion(1, "search 8..256 reproduces the 96 listed triplets", ok, f"{len(table)} rows, {elapsed:.2f}s")


def test_2_golden_quasi_pair(criterion):
    P = SupportSetMatrix.from_columns(pd.columns_of(pd.P))
    Q = substitute(P, pd.A, pd.B, F16)
    R = quasi_inverse(Q)
    ok = (
        Q.dense().to_lists() == pd.P_7_13
        and (R.a, R.b) == (pd.C, pd.D)
        and R.dense().to_lists() == pd.P_4_15
        and verify_quasi_inverse(Q, R)
    )
    assert criterion(2, "P_7,13 and P_4,15 exact, quasi-inverse verified", ok)


def test_3_golden_incidence_chain(criterion):
    D = SupportSetMatrix.identity(8)
    ok = True
    for L, M in pd.RECTANGLES:
        rect = build_cyclic(L[0], 3, pd.ROT)
        S = incidence(rect)
        ok &= [list(r) for r in rect.rows()] == L
        ok &= supports_to_dense(S).to_lists() == M
        D = support_product(D, S)
    ok &= supports_to_dense(D).to_lists() == pd.P
    assert criterion(3, "M1, M2, M3 exact and support chain equals P", ok)


def test_4_inverse_pair_exhaustive(criterion):
    P = random_orthogonal_binary_matrix(GeneratorConfig(8, seed=2024))
    t0 = time.perf_counter()
    failures = 0
    pairs = list(itertools.permutations(range(1, 16), 2))
    for a, b in pairs:
        c, d = inverse_pair(a, b, F16)
        residual_ok = (
            F16.add(F16.mul(a, c), F16.mul(b, d)) == 1 and F16.add(F16.mul(b, c), F16.mul(a, d)) == 0
        )
        Q = substitute(P, a, b, F16)
        if not (residual_ok and verify_quasi_inverse(Q, quasi_inverse(Q))):
            failures += 1
    elapsed = time.perf_counter() - t0
    ok = len(pairs) == 210 and failures == 0 and elapsed < 5
    assert criterion(4, "all 210 pairs in GF(16) satisfy the system and invert n=8", ok, f"{failures} failures, {elapsed:.2f}s")


def test_5_generator_orthogonality(criterion):
    failures, count = 0, 0
    for n, _, _ in SMALL_TRIPLETS:
        for seed in range(10):
            P = random_orthogonal_binary_matrix(GeneratorConfig(n, seed=seed))
            failures += not is_orthogonal(supports_to_dense(P))
            count += 1
    ok = count == 200 and failures == 0
    assert criterion(5, "200 generated matrices orthogonal under the dense oracle", ok, f"{failures}/{count} failed")


def _random_balanced(rng, n):
    """Incidence matrix of a random cyclic Latin rectangle with any valid (k, rot)."""
    while True:
        k = int(rng.integers(1, n + 1))
        rot = int(rng.integers(1, n))
        try:
            return incidence(build_cyclic(random_permutation(n, rng), k, rot))
        except NotLatin:
            continue


def test_6_support_product_equivalence(criterion):
    rng = make_rng(6)
    mismatches = 0
    for t in range(200):
        n = (8, 12, 16)[t % 3]
        A, B = _random_balanced(rng, n), _random_balanced(rng, n)
        naive = bin_matmul(supports_to_dense(A), supports_to_dense(B))
        mismatches += supports_to_dense(support_product(A, B)) != naive
    assert criterion(6, "200 support products equal naive F2 matmul", mismatches == 0, f"{mismatches} mismatches")


def test_7_hamming_weight(criterion):
    n = 64
    means = [
        weight_stats(random_orthogonal_binary_matrix(GeneratorConfig(n, 6, seed=s))).mean for s in range(100)
    ]
    grand = statistics.fmean(means)
    ok = 0.40 * n <= grand <= 0.60 * n
    assert criterion(7, "n=64 grand-mean column weight in [0.40n, 0.60n]", ok, f"mean {grand:.2f} = {grand / n:.3f}n")


def test_8_permutation_independence(criterion):
    rng = make_rng(8)
    failures = 0
    for n, k, rot in SMALL_TRIPLETS:
        for _ in range(50):
            M = incidence(build_cyclic(random_permutation(n, rng), k, rot))
            failures += not is_orthogonal(supports_to_dense(M))
    ok = failures == 0
    assert criterion(8, f"{len(SMALL_TRIPLETS)} triplets x 50 random R0 give orthogonal incidence", ok, f"{failures} failures")


def test_9_performance(criterion):
    report = run_bench(256, reps=20)
    ok = report.support_mean < 0.100 and report.support_mean < report.matmul_mean
    detail = f"support {report.support_mean * 1e3:.2f} ms, matmul {report.matmul_mean * 1e3:.1f} ms"
    assert criterion(9, "n=256 generation < 100 ms and faster than matmul path", ok, detail)
