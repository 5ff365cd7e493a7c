"""Dense reference linear algebra over F2 and GF(2^m).

Everything here is the slow, obvious algorithm on purpose.  It is the ground
truth the support-set kernel in :mod:`quasiortho.orthogen` is checked
against, so it must not call into that kernel.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, FieldMismatch, Singular
from .gf2m import FieldSpec


@dataclass(frozen=True)
class BinaryMatrix:
    """n x n matrix over F2; bit ``j`` of ``rows[i]`` is entry ``(i, j)``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise DimensionMismatch(f"{len(self.rows)} rows for n={self.n}")
        if any(not 0 <= r < (1 << self.n) for r in self.rows):
            raise ValueError("row wider than n bits")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> BinaryMatrix:
        n = len(rows)
        packed = []
        for row in rows:
            if len(row) != n:
                raise DimensionMismatch("matrix is not square")
            packed.append(sum((int(v) & 1) << j for j, v in enumerate(row)))
        return cls(n, tuple(packed))

    @classmethod
    def from_array(cls, a: np.ndarray) -> BinaryMatrix:
        return cls.from_lists(np.asarray(a).tolist())

    @classmethod
    def identity(cls, n: int) -> BinaryMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n: int) -> BinaryMatrix:
        return cls(n, (0,) * n)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i] >> j & 1

    def to_lists(self) -> list[list[int]]:
        return [[self[i, j] for j in range(self.n)] for i in range(self.n)]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.uint8).reshape(self.n, self.n)

    @property
    def T(self) -> BinaryMatrix:
        return bin_transpose(self)

    def __matmul__(self, other: BinaryMatrix) -> BinaryMatrix:
        return bin_matmul(self, other)


def bin_transpose(A: BinaryMatrix) -> BinaryMatrix:
    rows = []
    for j in range(A.n):
        r = 0
        for i in range(A.n):
            r |= A[i, j] << i
        rows.append(r)
    return BinaryMatrix(A.n, tuple(rows))


def bin_matmul(A: BinaryMatrix, B: BinaryMatrix) -> BinaryMatrix:
    """Product over F2: entry (i, j) is the parity of row i of A AND column j of B."""
    if A.n != B.n:
        raise DimensionMismatch(f"{A.n} vs {B.n}")
    cols = bin_transpose(B).rows
    rows = []
    for a in A.rows:
        r = 0
        for j, c in enumerate(cols):
            r |= ((a & c).bit_count() & 1) << j
        rows.append(r)
    return BinaryMatrix(A.n, tuple(rows))


def bin_inverse(A: BinaryMatrix) -> BinaryMatrix:
    """Gauss-Jordan inverse over F2; raises :class:`Singular` if rank < n."""
    n = A.n
    work = [(r, 1 << i) for i, r in enumerate(A.rows)]
    for col in range(n):
        pivot = next((p for p in range(col, n) if work[p][0] >> col & 1), None)
        if pivot is None:
            raise Singular(f"rank deficient at column {col}")
        work[col], work[pivot] = work[pivot], work[col]
        pr, pi = work[col]
        for r in range(n):
            if r != col and work[r][0] >> col & 1:
                work[r] = (work[r][0] ^ pr, work[r][1] ^ pi)
    return BinaryMatrix(n, tuple(inv for _, inv in work))


def bin_rank(A: BinaryMatrix) -> int:
    work = list(A.rows)
    rank = 0
    for col in range(A.n):
        pivot = next((p for p in range(rank, len(work)) if work[p] >> col & 1), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for r in range(len(work)):
            if r != rank and work[r] >> col & 1:
                work[r] ^= work[rank]
        rank += 1
    return rank


def is_orthogonal(A: BinaryMatrix) -> bool:
    return is_identity(bin_matmul(A, bin_transpose(A)))


@dataclass(frozen=True)
class FieldMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]
    field: FieldSpec

    def __post_init__(self) -> None:
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise DimensionMismatch("matrix is not n x n")
        for row in self.entries:
            for v in row:
                if v not in self.field:
                    raise FieldMismatch(f"{v} is not in {self.field}")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], field: FieldSpec) -> FieldMatrix:
        return cls(len(rows), tuple(tuple(int(v) for v in r) for r in rows), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> FieldMatrix:
        return cls(n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), field)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __matmul__(self, other: FieldMatrix) -> FieldMatrix:
        return field_matmul(self, other)


def field_matmul(A: FieldMatrix, B: FieldMatrix) -> FieldMatrix:
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.n != B.n:
        raise DimensionMismatch(f"{A.n} vs {B.n}")
    F, n = A.field, A.n
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            s = 0
            for t in range(n):
                s = F.add(s, F.mul(A.entries[i][t], B.entries[t][j]))
            row.append(s)
        out.append(tuple(row))
    return FieldMatrix(n, tuple(out), F)


def is_identity(A: FieldMatrix | BinaryMatrix) -> bool:
    n = A.n
    if isinstance(A, BinaryMatrix):
        return all(A.rows[i] == 1 << i for i in range(n))
    return all(A.entries[i][j] == (i == j) for i in range(n) for j in range(n))
