"""Permutations, cyclic Latin rectangles and their incidence matrices.

An n x n binary matrix is kept as its column support sets, packed into
Python ints: bit ``i`` of ``masks[j]`` is entry ``(i, j)``.  This is the only
representation the generator works with.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import DimensionMismatch, NotLatin

if TYPE_CHECKING:
    from .oracle import BinaryMatrix


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Permutation(Sequence[int]):
    elems: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elems", tuple(int(e) for e in self.elems))
        if sorted(self.elems) != list(range(len(self.elems))):
            raise ValueError(f"not a permutation of 0..{len(self.elems) - 1}: {self.elems}")

    def __len__(self) -> int:
        return len(self.elems)

    def __getitem__(self, i):  # type: ignore[override]
        return self.elems[i]

    def rotate_left(self, steps: int) -> tuple[int, ...]:
        n = len(self.elems)
        s = steps % n if n else 0
        return self.elems[s:] + self.elems[:s]


def make_rng(seed: int | np.random.Generator | None) -> np.random.Generator:
    """The package-wide random stream: numpy's PCG64 ``Generator``."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.PCG64(seed))


def random_permutation(n: int, rng: int | np.random.Generator | None = None) -> Permutation:
    """Uniform permutation of ``range(n)`` by a Fisher-Yates shuffle.

    All ``n - 1`` swap positions are drawn from ``rng`` in one call, so the
    output is a fixed function of the stream state.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = make_rng(rng)
    a = list(range(n))
    if n > 1:
        # js[t] is uniform on [0, i] for i = n-1-t
        js = rng.integers(0, np.arange(n, 1, -1)).tolist()
        for i, j in zip(range(n - 1, 0, -1), js):
            a[i], a[j] = a[j], a[i]
    return Permutation(tuple(a))


@dataclass(frozen=True)
class CyclicLatinRectangle:
    """k x n rectangle whose row ``i`` is ``r0`` rotated left by ``i * rot``.

    Rows are never stored; :meth:`row` and :meth:`column` compute them.
    """

    r0: Permutation
    k: int
    rot: int

    @property
    def n(self) -> int:
        return len(self.r0)

    def row(self, i: int) -> tuple[int, ...]:
        return self.r0.rotate_left(i * self.rot)

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.k)]

    def column(self, j: int) -> tuple[int, ...]:
        n = self.n
        return tuple(self.r0[(j + i * self.rot) % n] for i in range(self.k))


def build_cyclic(r0: Permutation | Sequence[int], k: int, rot: int) -> CyclicLatinRectangle:
    if not isinstance(r0, Permutation):
        r0 = Permutation(tuple(r0))
    n = len(r0)
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    if k > 1 and not 1 <= rot < n:
        raise ValueError(f"need 1 <= rot < n, got rot={rot}, n={n}")
    # Column j holds r0[j + i*rot]; those repeat iff i*rot == 0 (mod n).
    # This is weaker than gcd(n, rot) == 1, which several listed triplets violate.
    for i in range(1, k):
        if (i * rot) % n == 0:
            raise NotLatin(f"row {i} repeats row 0 (rot={rot}, n={n})")
    return CyclicLatinRectangle(r0, k, rot)


@dataclass(frozen=True)
class SupportSetMatrix:
    """Square binary matrix stored as column bitmasks."""

    n: int
    masks: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.masks) != self.n:
            raise DimensionMismatch(f"{len(self.masks)} columns for n={self.n}")
        bound = 1 << self.n
        for m in self.masks:
            if not 0 <= m < bound:
                raise ValueError(f"support index out of range [0, {self.n})")

    @classmethod
    def from_columns(cls, columns: Sequence[Iterable[int]]) -> SupportSetMatrix:
        n = len(columns)
        masks = []
        for col in columns:
            m = 0
            for i in col:
                if not 0 <= i < n:
                    raise ValueError(f"support index {i} out of range [0, {n})")
                m |= 1 << i
            masks.append(m)
        return cls(n, tuple(masks))

    @classmethod
    def identity(cls, n: int) -> SupportSetMatrix:
        return cls(n, tuple(1 << i for i in range(n)))

    @property
    def columns(self) -> tuple[tuple[int, ...], ...]:
        """Sorted support set of every column."""
        return tuple(tuple(_bits(m)) for m in self.masks)

    def __contains__(self, ij: tuple[int, int]) -> bool:
        i, j = ij
        return bool(self.masks[j] >> i & 1)

    def transpose(self) -> SupportSetMatrix:
        rows = [0] * self.n
        for j, m in enumerate(self.masks):
            for i in _bits(m):
                rows[i] |= 1 << j
        return SupportSetMatrix(self.n, tuple(rows))

    def column_weights(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def row_weights(self) -> list[int]:
        return self.transpose().column_weights()

    def to_array(self) -> np.ndarray:
        """Dense 0/1 ``uint8`` array, entry ``[i, j]`` set iff ``i`` in column ``j``."""
        out = np.zeros((self.n, self.n), dtype=np.uint8)
        for j, col in enumerate(self.columns):
            out[list(col), j] = 1
        return out


def incidence(L: CyclicLatinRectangle) -> SupportSetMatrix:
    """Incidence matrix of ``L``: entry (i, j) is 1 iff value ``i`` occurs in column ``j``."""
    n, r0, rot = L.n, L.r0.elems, L.rot
    masks = []
    for j in range(n):
        m = 0
        for i in range(L.k):
            m |= 1 << r0[(j + i * rot) % n]
        masks.append(m)
    return SupportSetMatrix(n, tuple(masks))


def supports_to_dense(S: SupportSetMatrix) -> BinaryMatrix:
    from .oracle import BinaryMatrix

    return BinaryMatrix.from_array(S.to_array())


def dense_to_supports(A: BinaryMatrix) -> SupportSetMatrix:
    cols = [[i for i in range(A.n) if A[i, j]] for j in range(A.n)]
    return SupportSetMatrix.from_columns(cols)
