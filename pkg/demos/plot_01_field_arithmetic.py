"""
Arithmetic in GF(16)
====================

Field elements are ints whose bits are polynomial coefficients.  We work
modulo x^4 + x^3 + 1, written 0x19.
"""

from quasiortho import make_field

F = make_field(4, 0x19)
print("field:", F)

# Addition is XOR, so every element is its own negative.
print("7 + 13 =", F.add(7, 13))

# Multiplication is a carry-less product reduced by the modulus.
print("7 * 13 =", F.mul(7, 13))

# Every nonzero element has an inverse.
for x in range(1, 16):
    assert F.mul(x, F.inv(x)) == 1
print("inverses:", {x: F.inv(x) for x in range(1, 16)})

# Squaring is additive in characteristic 2: (x + y)^2 = x^2 + y^2.
x, y = 7, 13
print("(7 + 13)^2 =", F.square(F.add(x, y)), "=", F.add(F.square(x), F.square(y)))

# The operator-overloaded wrapper reads like ordinary algebra.
a, b = F.element(7), F.element(13)
print("a / (a + b)^2 =", (a / (a + b) ** 2).value)
