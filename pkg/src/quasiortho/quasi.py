"""Quasi-binary matrices and their substitution inverses over GF(2^m).

Take an orthogonal binary matrix P and two distinct nonzero field elements
``a`` and ``b``.  Writing ``a`` for every 0 and ``b`` for every 1 gives
``P_ab``.  For even ``n`` its inverse is the transpose of P with ``c`` for 0
and ``d`` for 1, where ``c = a / (a + b)^2`` and ``d = b / (a + b)^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import BadPair, DimensionMismatch, FieldMismatch, SingularSystem
from .gf2m import FieldSpec
from .latin import SupportSetMatrix
from .oracle import FieldMatrix, field_matmul, is_identity


class InversePair(NamedTuple):
    c: int
    d: int


def _check_pair(a: int, b: int, field: FieldSpec) -> None:
    for v in (a, b):
        if v not in field:
            raise BadPair(f"{v!r} is not an element of {field}")
    if a == 0 or b == 0:
        raise BadPair(f"pair ({a}, {b}) contains zero")
    if a == b:
        raise BadPair(f"pair ({a}, {b}) is not distinct")


@dataclass(frozen=True)
class QuasiBinaryMatrix:
    """``backbone`` marks the entries equal to ``b``; all others equal ``a``."""

    backbone: SupportSetMatrix
    a: int
    b: int
    field: FieldSpec

    def __post_init__(self) -> None:
        _check_pair(self.a, self.b, self.field)

    @property
    def n(self) -> int:
        return self.backbone.n

    def entry(self, i: int, j: int) -> int:
        return self.b if (i, j) in self.backbone else self.a

    def dense(self) -> FieldMatrix:
        """Materialize all n*n entries.  Only tests and verification need this."""
        n, a, b = self.n, self.a, self.b
        masks = self.backbone.masks
        rows = tuple(tuple(b if masks[j] >> i & 1 else a for j in range(n)) for i in range(n))
        return FieldMatrix(n, rows, self.field)


def substitute(P: SupportSetMatrix, a: int, b: int, field: FieldSpec) -> QuasiBinaryMatrix:
    return QuasiBinaryMatrix(P, a, b, field)


def inverse_pair(a: int, b: int, field: FieldSpec) -> InversePair:
    """``(c, d)`` with ``a*c + b*d = 1`` and ``b*c + a*d = 0``.

    >>> from quasiortho.gf2m import make_field
    >>> inverse_pair(7, 13, make_field(4, 0x19))
    InversePair(c=4, d=15)
    """
    _check_pair(a, b, field)
    denom = field.square(field.add(a, b))
    return InversePair(field.div(a, denom), field.div(b, denom))


def solve_pair_system(a: int, b: int, field: FieldSpec) -> InversePair:
    """Solve ``[[a, b], [b, a]] @ [c, d] = [1, 0]`` by elimination.

    Independent of the closed form in :func:`inverse_pair`; the two must agree.
    """
    F = field
    if a not in F or b not in F:
        raise FieldMismatch(f"({a}, {b}) not in {F}")
    # rows: (coef_c, coef_d, rhs)
    r1, r2 = (a, b, 1), (b, a, 0)
    if r1[0] == 0:
        r1, r2 = r2, r1
    if r1[0] == 0:
        raise SingularSystem(f"a^2 = b^2 for ({a}, {b})")
    f = F.div(r2[0], r1[0])
    r2 = tuple(F.sub(x, F.mul(f, y)) for x, y in zip(r2, r1))
    if r2[1] == 0:
        raise SingularSystem(f"a^2 = b^2 for ({a}, {b})")
    d = F.div(r2[2], r2[1])
    c = F.div(F.sub(r1[2], F.mul(r1[1], d)), r1[0])
    return InversePair(c, d)


def quasi_inverse(Q: QuasiBinaryMatrix) -> QuasiBinaryMatrix:
    """Transpose the backbone and swap ``(a, b)`` for the inverse pair."""
    c, d = inverse_pair(Q.a, Q.b, Q.field)
    return QuasiBinaryMatrix(Q.backbone.transpose(), c, d, Q.field)


def verify_quasi_inverse(Q: QuasiBinaryMatrix, R: QuasiBinaryMatrix) -> bool:
    """Check ``Q @ R == I`` with the dense oracle product."""
    if Q.field != R.field:
        raise FieldMismatch(f"{Q.field} vs {R.field}")
    if Q.n != R.n:
        raise DimensionMismatch(f"{Q.n} vs {R.n}")
    return is_identity(field_matmul(Q.dense(), R.dense()))
