"""Linearized polynomials: evaluation, composition, and three ways to invert.

Run with:  python demos/02_linearized_polynomials.py
"""

from benttriples import (
    FieldCtx,
    LinearizedPoly,
    binomial_inverse,
    trinomial_inverse,
    involution_quadrinomial,
)
from benttriples.oracle import exhaustive_inverse

f16 = FieldCtx(4)

# A linearized polynomial sum(c_i x^(2^i)) acts GF(2)-linearly on the field.
poly = LinearizedPoly(f16, [3, 0, 1, 0])
print(f"p(x) = {poly.to_text()}")
print("additivity: p(a + b) == p(a) + p(b):",
      all(poly(a ^ b) == poly(a) ^ poly(b) for a in range(16) for b in range(16)))
print()

# Composition stays linearized; permutation testing is a rank computation.
sq = LinearizedPoly.monomial(f16, 1, 1)
print(f"x^2 o x^2 = {sq.compose(sq).to_text()}")
print(f"is p a permutation? {poly.is_permutation()}")
print(f"is the zero map?    {LinearizedPoly.zero(f16).is_permutation()}")
print()

# Route 1: generic inversion through the binary matrix of the map.
inv = poly.inverse()
print(f"p^-1(x) = {inv.to_text()}")
print(f"p o p^-1 is the identity: {poly.compose(inv).is_identity}")

# Route 2: the closed form for binomials a*x^(2^i) + b*x^(2^(m+i)) on GF(2^(2m)).
alpha, beta = 1, 2
phi = LinearizedPoly.monomial(f16, alpha, 0) + LinearizedPoly.monomial(f16, beta, 2)
closed = binomial_inverse(f16, alpha, beta, 0, 2)
print(f"\nbinomial {phi.to_text()}  ->  inverse {closed.to_text()}")
print(f"closed form agrees with the generic route: {closed == phi.inverse()}")

# Route 3: the brute-force value table (the oracle the tests trust).
table = exhaustive_inverse(phi)
print(f"value-table inverse agrees pointwise: "
      f"{all(closed(y) == table[y] for y in range(16))}")
print()

# Trinomials on GF(2^(6m)) invert through a 3x3 linear system.
f64 = FieldCtx(6)
sol = trinomial_inverse(f64, 2, 3, 5, 1)
print(f"trinomial inverse coefficients over GF(2^6): "
      f"({f64.elem_hex(sol.abar)}, {f64.elem_hex(sol.bbar)}, {f64.elem_hex(sol.gbar)}), "
      f"determinant {f64.elem_hex(sol.determinant)}")
tri = LinearizedPoly(f64, [0, 2, 0, 3, 0, 5])
print(f"composes to identity: {tri.compose(sol.poly()).is_identity}")
print()

# And the quadrinomial involutions used by two of the triple families.
quad = involution_quadrinomial(f16, 1, 6, 1)
print(f"quadrinomial {quad.to_text()}")
print(f"self-inverse: {quad.compose(quad).is_identity}")
