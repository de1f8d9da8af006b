"""Shared helpers for the test suite.

Everything here is deterministic; the independent mini-oracles (naive
transform, affine-distance scan, schoolbook reduction) deliberately
avoid the library's own fast paths.
"""

from __future__ import annotations

import numpy as np

from benttriples import (
    FieldCtx,
    LinearizedPoly,
    PermutationTriple,
    build_family,
    enumerate_params,
    verify_triple,
)

FAMILIES_M1 = (
    ("fam1", 4, 1),
    ("fam2", 4, 1),
    ("fam3i", 6, 1),
    ("fam3ii", 6, 1),
    ("fam4", 4, 1),
    ("fam5", 4, 1),
)


def family_triples_m1() -> list[tuple[str, PermutationTriple]]:
    """All valid family triples at m = 1 (F_16 and F_64, default moduli)."""
    out = []
    for family, degree, m in FAMILIES_M1:
        ctx = FieldCtx(degree)
        for params in enumerate_params(ctx, family, m):
            out.append((family, build_family(ctx, family, m, params)))
    return out


def mul_table_np(ctx: FieldCtx) -> np.ndarray:
    """Dense product table built one scalar product at a time."""
    size = ctx.order
    table = np.zeros((size, size), dtype=np.int32)
    for a in range(size):
        for b in range(size):
            table[a, b] = ctx.mul(a, b)
    return table


def schoolbook_mul(a: int, b: int, modulus: int, n: int) -> int:
    """Independent GF(2^n) product: expand the full product, then reduce."""
    prod = 0
    for i in range(n):
        if (a >> i) & 1:
            prod ^= b << i
    for deg in range(prod.bit_length() - 1, n - 1, -1):
        if (prod >> deg) & 1:
            prod ^= modulus << (deg - n)
    return prod


def naive_fwht(vec) -> list[int]:
    """Literal double-loop transform with the bit dot product."""
    size = len(vec)
    return [
        sum(-v if (u & x).bit_count() & 1 else v for x, v in enumerate(vec))
        for u in range(size)
    ]


def affine_distance(table: np.ndarray) -> int:
    """Exhaustive nonlinearity: min Hamming distance to every affine function."""
    size = table.size
    best = size
    xs = np.arange(size)
    for u in range(size):
        lin = np.zeros(size, dtype=np.uint8)
        for bit in range(size.bit_length() - 1):
            lin ^= ((xs >> bit) & 1).astype(np.uint8) * ((u >> bit) & 1)
        d = int(np.count_nonzero(lin != table))
        best = min(best, d, size - d)
    return best


def random_permutation_poly(ctx: FieldCtx, rng) -> LinearizedPoly:
    while True:
        poly = LinearizedPoly(ctx, [rng.randrange(ctx.order) for _ in range(ctx.n)])
        if poly.is_permutation():
            return poly


def perturbed_failing_triples(want: int) -> list[PermutationTriple]:
    """Triples of permutations over F_16 that fail the sum-inverse property.

    Produced by changing one coefficient of one member of a valid family
    triple, keeping the member a permutation, and keeping only changes
    that break the property.  Deterministic scan order.
    """
    ctx = FieldCtx(4)
    found: list[PermutationTriple] = []
    seen: set[tuple] = set()
    for family, degree, m in FAMILIES_M1:
        if degree != 4:
            continue
        for params in enumerate_params(ctx, family, m):
            base = build_family(ctx, family, m, params)
            polys = list(base.polys())
            for which in range(3):
                for slot in range(ctx.n):
                    for newval in ctx.elements():
                        if newval == polys[which].coeffs[slot]:
                            continue
                        coeffs = list(polys[which].coeffs)
                        coeffs[slot] = newval
                        cand_poly = LinearizedPoly(ctx, coeffs)
                        if not cand_poly.is_permutation():
                            continue
                        cand_polys = list(polys)
                        cand_polys[which] = cand_poly
                        key = tuple(sorted(p.coeffs for p in cand_polys))
                        if key in seen:
                            continue
                        triple = PermutationTriple(ctx, *cand_polys)
                        report = verify_triple(triple)
                        assert all(report.each_permutation)
                        if not report.satisfied:
                            seen.add(key)
                            found.append(triple)
                            if len(found) >= want:
                                return found
    return found


def assert_spectrum_consistent(func, spectrum) -> None:
    """Parseval and the zero-index identity, on exact integers."""
    two_n = 2 * spectrum.n
    values = spectrum.values.astype(np.int64)
    assert int(np.sum(values * values)) == 1 << (2 * two_n)
    assert int(spectrum.values[0]) == (1 << two_n) - 2 * func.weight()
