import random

import numpy as np
import pytest

from benttriples import (
    BooleanFunction,
    FieldCtx,
    LinearizedPoly,
    NotInvertibleError,
    PermutationTriple,
    ResourceLimitError,
    family1,
    involution_quadrinomial,
    verify_triple,
    walsh_spectrum,
)
from benttriples.oracle import (
    exhaustive_inverse,
    involution_scan,
    naive_walsh,
    pointwise_triple_check,
)
from support import family_triples_m1, random_permutation_poly


@pytest.fixture(scope="module")
def f16():
    return FieldCtx(4)


def test_naive_walsh_constant_zero_delta():
    ctx = FieldCtx(2)
    spec = naive_walsh(BooleanFunction.constant(ctx, 0))
    assert spec.values[0] == 16
    assert not spec.values[1:].any()


def test_naive_walsh_inner_product_literal_double_loop():
    # re-derive the 16-value spectrum of Tr(xy) on F_4 x F_4 with a raw
    # scalar quadruple loop, then compare with naive_walsh
    ctx = FieldCtx(2)
    table = np.zeros(16, dtype=np.uint8)
    for x in ctx.elements():
        for y in ctx.elements():
            table[(x << 2) | y] = ctx.trace(ctx.mul(x, y))
    func = BooleanFunction(ctx, table)
    expected = []
    for a in ctx.elements():
        for b in ctx.elements():
            acc = 0
            for x in ctx.elements():
                for y in ctx.elements():
                    e = int(table[(x << 2) | y]) ^ ctx.trace(
                        ctx.mul(a, x) ^ ctx.mul(b, y)
                    )
                    acc += 1 - 2 * e
            expected.append(acc)
    spec = naive_walsh(func)
    assert spec.values.tolist() == expected
    assert set(abs(v) for v in expected) == {4}


def test_naive_walsh_agrees_with_fast_on_random_8_variables():
    ctx = FieldCtx(4)
    rng = np.random.default_rng(123)
    for _ in range(100):
        func = BooleanFunction(ctx, rng.integers(0, 2, size=256).astype(np.uint8))
        assert np.array_equal(naive_walsh(func).values, walsh_spectrum(func).values)


def test_naive_walsh_size_cap():
    with pytest.raises(ResourceLimitError):
        naive_walsh(BooleanFunction.constant(FieldCtx(9), 0))


def test_pointwise_check_identity_triple(f16):
    ident = LinearizedPoly.identity(f16)
    report = pointwise_triple_check(PermutationTriple(f16, ident, ident, ident))
    assert report.satisfied


def test_pointwise_check_matches_verifier_on_families():
    for _, t in family_triples_m1():
        assert pointwise_triple_check(t) == verify_triple(t)


def test_pointwise_check_flags_non_bijective_member(f16):
    collapsed = LinearizedPoly(f16, [1, 1, 1, 1])
    t = PermutationTriple(
        f16, collapsed, LinearizedPoly.identity(f16), LinearizedPoly.identity(f16)
    )
    report = pointwise_triple_check(t)
    assert report.each_permutation == (False, True, True)
    assert not report.satisfied


def test_pointwise_check_size_cap():
    ctx = FieldCtx(16)
    ident = LinearizedPoly.identity(ctx)
    with pytest.raises(ResourceLimitError):
        pointwise_triple_check(PermutationTriple(ctx, ident, ident, ident))


def test_exhaustive_inverse_identity_and_square(f16):
    ident = LinearizedPoly.identity(f16)
    assert exhaustive_inverse(ident) == list(f16.elements())
    sq = LinearizedPoly.monomial(f16, 1, 1)
    table = exhaustive_inverse(sq)
    for v in f16.elements():
        assert f16.mul(table[v], table[v]) == v  # square roots


def test_exhaustive_inverse_matches_generic_f256():
    ctx = FieldCtx(8)
    rng = random.Random(77)
    for _ in range(100):
        poly = random_permutation_poly(ctx, rng)
        inv = poly.inverse()
        table = exhaustive_inverse(poly)
        for y in range(0, ctx.order, 3):
            assert inv(y) == table[y]


def test_exhaustive_inverse_rejects_non_permutation(f16):
    with pytest.raises(NotInvertibleError):
        exhaustive_inverse(LinearizedPoly.zero(f16))


def test_involution_scan(f16):
    assert involution_scan(LinearizedPoly.identity(f16))
    assert not involution_scan(LinearizedPoly.monomial(f16, 1, 1))  # order 4
    for c in (0, 1):
        for d in (0, 1, 6, 7):
            assert involution_scan(involution_quadrinomial(f16, c, d, 1))


def test_involution_scan_size_cap():
    with pytest.raises(ResourceLimitError):
        involution_scan(LinearizedPoly.identity(FieldCtx(16)))
