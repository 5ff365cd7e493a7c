"""Random orthogonal binary matrices without matrix multiplication.

A cyclic Latin rectangle with suitable ``(n, k, rot)`` has an orthogonal
incidence matrix whatever its first row is.  Multiplying several of them
gives a random-looking orthogonal matrix, and the products are done on
column supports: column ``i`` of ``D @ C`` is the XOR of the columns of ``D``
selected by column ``i`` of ``C``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from statistics import fmean
from typing import NamedTuple

import numpy as np

from .errors import DimensionMismatch, OddDimension, TripletNotFound
from .latin import SupportSetMatrix, build_cyclic, incidence, make_rng, random_permutation

DEFAULT_ITERATIONS = 6
MAX_K = 64


class ParamTriplet(NamedTuple):
    n: int
    k: int
    rot: int


def _rotl(mask: int, d: int, n: int) -> int:
    full = (1 << n) - 1
    return ((mask << d) | (mask >> (n - d))) & full


def is_orthogonal_triplet(n: int, k: int, rot: int) -> bool:
    """True iff every cyclic Latin rectangle with these parameters has M @ M.T == I.

    Column ``j`` of the incidence matrix is the image under ``r0`` of the
    index set ``{j + i*rot mod n}``, so orthogonality only depends on the
    overlaps between that index set and its cyclic shifts: ``k`` itself must
    be odd and every overlap with a nontrivial shift must be even.
    """
    if not (n >= 2 and 1 <= k <= n and 1 <= rot < n):
        raise ValueError(f"invalid parameters ({n}, {k}, {rot})")
    if k % 2 == 0:
        return False
    base = 0
    for i in range(k):
        bit = 1 << (i * rot) % n
        if base & bit:
            return False  # column would repeat a value
        base |= bit
    return all((base & _rotl(base, d, n)).bit_count() % 2 == 0 for d in range(1, n))


@lru_cache(maxsize=None)
def find_params(n: int) -> ParamTriplet | None:
    """Smallest odd ``k``, then smallest ``rot``, giving orthogonal incidence matrices.

    ``k`` runs over 3, 5, ... up to ``min(n - 3, 64)``.  ``k = n - 1`` is
    excluded: it always works for even ``n`` but only yields the all-ones
    matrix minus a permutation matrix.  Returns ``None`` when nothing is found.
    """
    if n % 2:
        raise OddDimension(f"n must be even, got {n}")
    if n < 4:
        raise ValueError(f"n must be >= 4, got {n}")
    for k in range(3, min(n - 3, MAX_K) + 1, 2):
        for rot in range(1, n):
            if is_orthogonal_triplet(n, k, rot):
                return ParamTriplet(n, k, rot)
    return None


def search_table(n_min: int, n_max: int) -> list[ParamTriplet]:
    """All triplets found by :func:`find_params` for even n in ``[n_min, n_max]``."""
    if n_min > n_max:
        raise ValueError(f"empty range [{n_min}, {n_max}]")
    start = max(n_min + n_min % 2, 4)
    found = (find_params(n) for n in range(start, n_max + 1, 2))
    return [t for t in found if t is not None]


def support_product(D_prev: SupportSetMatrix, C: SupportSetMatrix) -> SupportSetMatrix:
    """``D_prev @ C`` over F2, computed as symmetric differences of column supports."""
    if D_prev.n != C.n:
        raise DimensionMismatch(f"{D_prev.n} vs {C.n}")
    prev = D_prev.masks
    out = []
    for sel in C.masks:
        acc = 0
        while sel:
            low = sel & -sel
            acc ^= prev[low.bit_length() - 1]
            sel ^= low
        out.append(acc)
    return SupportSetMatrix(D_prev.n, tuple(out))


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    iterations: int = DEFAULT_ITERATIONS
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")


def triplet_for(n: int) -> ParamTriplet:
    try:
        t = find_params(n)
    except (OddDimension, ValueError) as exc:
        raise TripletNotFound(f"no parameter triplet for n={n}: {exc}") from exc
    if t is None:
        raise TripletNotFound(f"no parameter triplet for n={n}")
    return t


def random_incidence_factors(
    cfg: GeneratorConfig, rng: np.random.Generator | None = None
) -> list[SupportSetMatrix]:
    """The ``cfg.iterations`` random incidence matrices a generation run multiplies."""
    t = triplet_for(cfg.n)
    rng = make_rng(cfg.seed) if rng is None else rng
    return [
        incidence(build_cyclic(random_permutation(cfg.n, rng), t.k, t.rot))
        for _ in range(cfg.iterations)
    ]


def random_orthogonal_binary_matrix(
    cfg: GeneratorConfig | int, rng: np.random.Generator | None = None
) -> SupportSetMatrix:
    """Random n x n orthogonal binary matrix as column supports.

    Starts from the identity and folds in ``cfg.iterations`` fresh random
    incidence matrices with :func:`support_product`.  The same seed always
    gives the same matrix.

    >>> P = random_orthogonal_binary_matrix(GeneratorConfig(8, seed=1))
    >>> P.n
    8
    """
    if isinstance(cfg, int):
        cfg = GeneratorConfig(cfg)
    D = SupportSetMatrix.identity(cfg.n)
    for M in random_incidence_factors(cfg, rng):
        D = support_product(D, M)
    return D


class WeightStats(NamedTuple):
    min: int
    max: int
    mean: float


def weight_stats(P: SupportSetMatrix, rows: bool = False) -> WeightStats:
    w = P.row_weights() if rows else P.column_weights()
    return WeightStats(min(w), max(w), fmean(w))
