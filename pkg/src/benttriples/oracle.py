"""Brute-force reference implementations used as ground truth in tests.

Everything here recomputes results straight from definitions: spectra
from the defining character sum, permutation facts from occupancy
bitmaps, inverses from value tables, involutions from pointwise
composition.  Field arithmetic is the only shared code; trace masks,
evaluation tables, the butterfly transform and the polynomial
composition algebra of the main modules are deliberately not reused, so
a bug there cannot hide here.  Sizes are capped (2n <= 16 for spectra,
n <= 12 elsewhere) because trustworthiness, not speed, is the point.
"""

from __future__ import annotations

import numpy as np

from .errors import NotInvertibleError, ResourceLimitError
from .bent import BooleanFunction, WalshSpectrum
from .linearized import LinearizedPoly
from .triples import PermutationTriple, TripleReport

NAIVE_WALSH_MAX_DEGREE = 8  # 2n <= 16
POINTWISE_MAX_DEGREE = 12


def _value_table(poly: LinearizedPoly) -> list[int]:
    # Per-point evaluation from the definition sum(c_i * x^(2^i)), with
    # x^(2^i) reached by repeated squaring.
    ctx = poly.ctx
    mul = ctx.mul
    support = [(i, c) for i, c in enumerate(poly.coeffs) if c]
    tab = []
    for x in range(ctx.order):
        acc = 0
        xx = x
        prev = 0
        for i, c in support:
            for _ in range(i - prev):
                xx = mul(xx, xx)
            prev = i
            acc ^= mul(c, xx)
        tab.append(acc)
    return tab


def naive_walsh(f: BooleanFunction) -> WalshSpectrum:
    """Spectrum from the defining sum over all points and all characters.

    W(a, b) = sum over (x, y) of (-1)^(f(x,y) + Tr(ax) + Tr(by)); the
    character splits as (-1)^Tr(ax) * (-1)^Tr(by), so the double sum is
    evaluated as chi . S . chi^T with chi the elementwise-built character
    table.  Exact 64-bit integer arithmetic throughout.
    """
    ctx = f.ctx
    n = ctx.n
    if n > NAIVE_WALSH_MAX_DEGREE:
        raise ResourceLimitError(
            f"brute-force spectra stop at 2n = {2 * NAIVE_WALSH_MAX_DEGREE}, got {2 * n}"
        )
    size = ctx.order
    chi = np.empty((size, size), dtype=np.int64)
    for a in range(size):
        for x in range(size):
            chi[a, x] = 1 - 2 * ctx.trace(ctx.mul(a, x))
    signs = (1 - 2 * f.table.astype(np.int64)).reshape(size, size)
    grid = chi @ signs @ chi.T
    return WalshSpectrum(n, grid.reshape(-1))


def pointwise_triple_check(t: PermutationTriple) -> TripleReport:
    """The sum-inverse property decided by exhaustive evaluation.

    Bijectivity comes from occupancy bitmaps and the inverse condition
    from value-table lookups: for every y the preimage of y under the
    sum must equal the XOR of the three preimages of y.
    """
    ctx = t.ctx
    if ctx.n > POINTWISE_MAX_DEGREE:
        raise ResourceLimitError(
            f"pointwise checking stops at degree {POINTWISE_MAX_DEGREE}, got {ctx.n}"
        )
    size = ctx.order
    tables = [_value_table(p) for p in t.polys()]

    def bijective(tab: list[int]) -> bool:
        seen = bytearray(size)
        for v in tab:
            if seen[v]:
                return False
            seen[v] = 1
        return True

    perms = tuple(bijective(tab) for tab in tables)
    psi_tab = [a ^ b ^ c for a, b, c in zip(*tables)]
    sum_perm = bijective(psi_tab)
    inverse_ok = False
    if all(perms) and sum_perm:
        invs = []
        for tab in tables + [psi_tab]:
            inv = [0] * size
            for x, v in enumerate(tab):
                inv[v] = x
            invs.append(inv)
        i1, i2, i3, ipsi = invs
        inverse_ok = all(ipsi[y] == i1[y] ^ i2[y] ^ i3[y] for y in range(size))
    return TripleReport(
        each_permutation=perms,
        sum_is_permutation=sum_perm,
        inverse_sum_identity=inverse_ok,
        satisfied=all(perms) and sum_perm and inverse_ok,
    )


def exhaustive_inverse(poly: LinearizedPoly) -> list[int]:
    """Full inverse lookup table of a permutation polynomial."""
    ctx = poly.ctx
    if ctx.n > POINTWISE_MAX_DEGREE:
        raise ResourceLimitError(
            f"exhaustive inversion stops at degree {POINTWISE_MAX_DEGREE}, got {ctx.n}"
        )
    size = ctx.order
    inv = [-1] * size
    for x, v in enumerate(_value_table(poly)):
        if inv[v] != -1:
            raise NotInvertibleError("value table has a collision: not a permutation")
        inv[v] = x
    return inv


def involution_scan(poly: LinearizedPoly) -> bool:
    """Pointwise check that poly(poly(x)) = x everywhere."""
    ctx = poly.ctx
    if ctx.n > POINTWISE_MAX_DEGREE:
        raise ResourceLimitError(
            f"involution scanning stops at degree {POINTWISE_MAX_DEGREE}, got {ctx.n}"
        )
    tab = _value_table(poly)
    return all(tab[tab[x]] == x for x in range(ctx.order))
