"""Arithmetic in GF(2^m) for 2 <= m <= 16.

Elements are plain ints whose bit ``i`` is the coefficient of ``x**i``, so
``x^2 + x + 1`` is ``7``.  The modulus is given the same way: ``0x19`` is
``x^4 + x^3 + 1``.

>>> F = make_field(4, 0x19)
>>> F.mul(7, 13)
8
>>> F.inv(F.square(F.add(7, 13)))
10
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeMismatch, DivisionByZero, FieldMismatch, ReduciblePolynomial

MIN_DEGREE = 2
MAX_DEGREE = 16


def clmul(x: int, y: int) -> int:
    """Carry-less product of two F2[x] polynomials."""
    r = 0
    while y:
        if y & 1:
            r ^= x
        x <<= 1
        y >>= 1
    return r


def poly_mod(x: int, p: int) -> int:
    """Remainder of ``x`` divided by ``p`` in F2[x]."""
    dp = p.bit_length()
    while x.bit_length() >= dp:
        x ^= p << (x.bit_length() - dp)
    return x


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg(poly) // 2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            if poly_mod(poly, q) == 0:
                return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A concrete GF(2^m): degree ``m`` and irreducible modulus ``poly``.

    Build through :func:`make_field`, which validates the modulus.
    """

    m: int
    poly: int

    @property
    def order(self) -> int:
        return 1 << self.m

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 0 <= x < (1 << self.m)

    def _check(self, *xs: int) -> None:
        for x in xs:
            if x not in self:
                raise FieldMismatch(f"{x!r} is not an element of GF(2^{self.m})")

    def add(self, x: int, y: int) -> int:
        self._check(x, y)
        return x ^ y

    sub = add

    def mul(self, x: int, y: int) -> int:
        self._check(x, y)
        return poly_mod(clmul(x, y), self.poly)

    def square(self, x: int) -> int:
        return self.mul(x, x)

    def pow(self, x: int, e: int) -> int:
        self._check(x)
        if e < 0:
            return self.pow(self.inv(x), -e)
        result, base = 1, x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, x: int) -> int:
        """Multiplicative inverse via the extended Euclidean algorithm."""
        self._check(x)
        if x == 0:
            raise DivisionByZero("0 has no inverse")
        r0, r1 = self.poly, x
        s0, s1 = 0, 1
        while r1:
            q = 0
            while r0.bit_length() >= r1.bit_length():
                shift = r0.bit_length() - r1.bit_length()
                q ^= 1 << shift
                r0 ^= r1 << shift
            r0, r1 = r1, r0
            s0, s1 = s1, s0 ^ clmul(q, s1)
        # r0 is the gcd, which is 1 for an irreducible modulus
        return poly_mod(s0, self.poly)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def elements(self) -> range:
        return range(self.order)

    def element(self, value: int) -> FieldElement:
        self._check(value)
        return FieldElement(value, self)

    def __str__(self) -> str:
        return f"GF(2^{self.m})/{self.poly:#x}"


def make_field(m: int, poly: int) -> FieldSpec:
    """Validate ``(m, poly)`` and return the field.

    Raises :class:`DegreeMismatch` when ``poly`` does not have degree exactly
    ``m`` and :class:`ReduciblePolynomial` when it factors over F2.
    """
    if not MIN_DEGREE <= m <= MAX_DEGREE:
        raise ValueError(f"degree must be in [{MIN_DEGREE}, {MAX_DEGREE}], got {m}")
    if poly.bit_length() - 1 != m:
        raise DegreeMismatch(f"{poly:#x} has degree {poly.bit_length() - 1}, expected {m}")
    if not poly & 1 or not is_irreducible(poly):
        raise ReduciblePolynomial(f"{poly:#x} is reducible over F2")
    return FieldSpec(m, poly)


@dataclass(frozen=True)
class FieldElement:
    """An element bound to its field, with operator overloads."""

    value: int
    field: FieldSpec

    def _other(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return other

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field.add(self.value, self._other(other)), self.field)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field.mul(self.value, self._other(other)), self.field)

    __rmul__ = __mul__

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.field.div(self.value, self._other(other)), self.field)

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field.pow(self.value, e), self.field)

    def __neg__(self) -> FieldElement:
        return self

    def inverse(self) -> FieldElement:
        return FieldElement(self.field.inv(self.value), self.field)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.value == other
        if isinstance(other, FieldElement):
            return self.value == other.value and self.field == other.field
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"FieldElement({self.value}, {self.field})"
