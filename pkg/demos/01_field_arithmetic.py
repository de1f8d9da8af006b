"""Tour of GF(2^n) arithmetic: contexts, elements, traces, subfields.

Run with:  python demos/01_field_arithmetic.py
"""

from benttriples import FieldCtx, default_modulus

# A context fixes the extension degree and the irreducible modulus.  With
# no modulus given you get the lexicographically smallest irreducible, so
# two machines always agree on what "GF(2^4)" means.
f16 = FieldCtx(4)
print(f"GF(2^4) default modulus: 0b{f16.modulus:b}  (x^4 + x + 1)")
print(f"field spec string      : {f16.spec}")
print("defaults for n = 1..12 :", [bin(default_modulus(n)) for n in range(1, 13)])
print()

# Elements are integers; bit i is the coefficient of g^i.
g = 2  # the residue class of x
print("powers of g in GF(2^4):")
acc = 1
for k in range(16):
    print(f"  g^{k:<2} = {f16.elem_hex(acc)} = 0b{acc:04b}")
    acc = f16.mul(acc, g)
print()

# Addition is XOR; inversion is exponentiation by 2^n - 2.
a, b = 0b0011, 0b0101
print(f"{f16.elem_hex(a)} + {f16.elem_hex(b)} = {f16.elem_hex(f16.add(a, b))}")
print(f"inv(g) * g = {f16.elem_hex(f16.mul(f16.inv(g), g))}")
print()

# The absolute trace maps onto GF(2) and splits the field in half.
zeros = [x for x in f16.elements() if f16.trace(x) == 0]
print(f"trace-0 elements of GF(2^4): {len(zeros)} of 16 -> {zeros}")

# Subfields are cut out by the Frobenius map x -> x^(2^d).
f4_inside = [x for x in f16.elements() if f16.in_subfield(x, 2)]
print(f"the copy of GF(4) inside GF(16): {f4_inside}")
print()

# The element wrapper carries its context and refuses to mix fields.
x = f16(6)
y = f16(7)
print(f"wrapped algebra: (x + y) * x^2 = {(x + y) * x ** 2!r}")
other = FieldCtx(4, 0b11111)
try:
    x + other(6)
except Exception as exc:
    print(f"mixing moduli raises: {exc}")
