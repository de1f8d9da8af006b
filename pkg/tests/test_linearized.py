import random

import numpy as np
import pytest

from benttriples import (
    ConditionError,
    ContextMismatchError,
    FieldCtx,
    LinearizedPoly,
    NotInvertibleError,
    binomial_inverse,
    involution_quadrinomial,
    trinomial_inverse,
)
from benttriples.oracle import exhaustive_inverse
from support import random_permutation_poly


@pytest.fixture(scope="module")
def f16():
    return FieldCtx(4)


@pytest.fixture(scope="module")
def f64():
    return FieldCtx(6)


# -- evaluation --------------------------------------------------------------------

def test_eval_identity_zero(f16):
    ident = LinearizedPoly.identity(f16)
    zero = LinearizedPoly.zero(f16)
    for x in f16.elements():
        assert ident(x) == x
        assert zero(x) == 0


def test_eval_family1_sum_is_involution(f16):
    # lambda = 1, m = 1: x^2 + x^4 + x^8 composed with itself fixes the field
    psi = LinearizedPoly(f16, [0, 1, 1, 1])
    for x in f16.elements():
        assert psi(psi(x)) == x


def test_eval_additive():
    rng = random.Random(7)
    for n in (2, 4, 6, 8):
        ctx = FieldCtx(n)
        for _ in range(3):
            poly = LinearizedPoly(ctx, [rng.randrange(ctx.order) for _ in range(n)])
            for x in ctx.elements():
                for y in range(0, ctx.order, 3):
                    assert poly(x ^ y) == poly(x) ^ poly(y)


def test_eval_table_matches_pointwise():
    rng = random.Random(11)
    for n in (2, 4, 6, 8):
        ctx = FieldCtx(n)
        for _ in range(5):
            poly = LinearizedPoly(ctx, [rng.randrange(ctx.order) for _ in range(n)])
            table = poly.eval_table()
            assert all(table[x] == poly(x) for x in ctx.elements())


# -- algebra -----------------------------------------------------------------------

def test_add(f16):
    rng = random.Random(3)
    zero = LinearizedPoly.zero(f16)
    for _ in range(10):
        poly = LinearizedPoly(f16, [rng.randrange(16) for _ in range(4)])
        assert poly + poly == zero
        assert poly + zero == poly
    a = LinearizedPoly(f16, [1, 2, 0, 0])
    b = LinearizedPoly(f16, [0, 3, 4, 0])
    s = a + b
    for x in f16.elements():
        assert s(x) == a(x) ^ b(x)


def test_compose_identity_and_frobenius(f16):
    ident = LinearizedPoly.identity(f16)
    sq = LinearizedPoly.monomial(f16, 1, 1)
    quad = LinearizedPoly.monomial(f16, 1, 2)
    rng = random.Random(5)
    poly = LinearizedPoly(f16, [rng.randrange(16) for _ in range(4)])
    assert ident.compose(poly) == poly
    assert poly.compose(ident) == poly
    assert sq.compose(sq) == quad


def test_compose_matches_nested_eval():
    rng = random.Random(13)
    for n in (2, 4, 6, 8):
        ctx = FieldCtx(n)
        for _ in range(6):
            lhs = LinearizedPoly(ctx, [rng.randrange(ctx.order) for _ in range(n)])
            rhs = LinearizedPoly(ctx, [rng.randrange(ctx.order) for _ in range(n)])
            comp = lhs.compose(rhs)
            for x in ctx.elements():
                assert comp(x) == lhs(rhs(x))


def test_compose_associative(f16):
    rng = random.Random(17)
    for _ in range(8):
        a, b, c = (
            LinearizedPoly(f16, [rng.randrange(16) for _ in range(4)]) for _ in range(3)
        )
        assert a.compose(b).compose(c) == a.compose(b.compose(c))


# -- permutation testing ---------------------------------------------------------

def test_is_permutation_basics(f16):
    assert LinearizedPoly.identity(f16).is_permutation()
    assert not LinearizedPoly.zero(f16).is_permutation()
    for lam in (1, 6, 7):  # the cube roots of unity in F_16
        psi = LinearizedPoly(f16, [0, lam, 1, lam])
        assert psi.is_permutation()


@pytest.mark.parametrize("n", [2, 4, 6, 8, 12])
def test_is_permutation_agrees_with_bitmap(n):
    ctx = FieldCtx(n)
    rng = random.Random(n)
    polys = [LinearizedPoly.zero(ctx), LinearizedPoly.identity(ctx)]
    polys += [
        LinearizedPoly(ctx, [rng.randrange(ctx.order) for _ in range(n)])
        for _ in range(25)
    ]
    # the trace map as a linearized polynomial: never a permutation for n > 1
    polys.append(LinearizedPoly(ctx, [1] * n))
    for poly in polys:
        seen = bytearray(ctx.order)
        collision = False
        for x in ctx.elements():
            v = poly(x)
            if seen[v]:
                collision = True
                break
            seen[v] = 1
        assert poly.is_permutation() == (not collision)


# -- generic inversion --------------------------------------------------------------

def test_inverse_identity_and_monomials(f16):
    ident = LinearizedPoly.identity(f16)
    assert ident.inverse() == ident
    for k in range(1, 4):
        mono = LinearizedPoly.monomial(f16, 1, k)
        assert mono.inverse() == LinearizedPoly.monomial(f16, 1, 4 - k)


def test_inverse_round_trips():
    rng = random.Random(23)
    for n in (2, 4, 6, 8):
        ctx = FieldCtx(n)
        ident = LinearizedPoly.identity(ctx)
        for _ in range(10):
            poly = random_permutation_poly(ctx, rng)
            inv = poly.inverse()
            assert inv.compose(poly) == ident
            assert poly.compose(inv) == ident


def test_inverse_of_family4_binomial_is_closed_form(f16):
    # for valid (alpha, beta) the inverse of alpha*x + beta*x^2 is
    # alpha^3*x + alpha^2*beta*x^2 + alpha*beta^3*x^4 + beta^5*x^8
    for alpha in (0, 1):
        for beta in f16.elements():
            if not f16.in_subfield(beta, 2):
                continue
            if f16.pow(beta, 3) != f16.mul(alpha, alpha) ^ 1 or (alpha, beta) == (1, 0):
                continue
            phi1 = LinearizedPoly(f16, [alpha, beta, 0, 0])
            b3 = f16.pow(beta, 3)
            expected = LinearizedPoly(
                f16,
                [
                    f16.pow(alpha, 3),
                    f16.mul(f16.mul(alpha, alpha), beta),
                    f16.mul(alpha, b3),
                    f16.mul(beta, b3),
                ],
            )
            assert phi1.inverse() == expected


def test_inverse_rejects_non_permutation(f16):
    with pytest.raises(NotInvertibleError):
        LinearizedPoly.zero(f16).inverse()
    with pytest.raises(NotInvertibleError):
        LinearizedPoly(f16, [1, 1, 1, 1]).inverse()


# -- binomial closed form -----------------------------------------------------------

def test_binomial_inverse_degenerate_beta_zero(f16):
    out = binomial_inverse(f16, 3, 0, 0, 2)
    assert out == LinearizedPoly.monomial(f16, f16.inv(3), 0)
    out = binomial_inverse(f16, 1, 0, 1, 2)
    assert out.compose(LinearizedPoly.monomial(f16, 1, 1)).is_identity


def test_binomial_inverse_composes_to_identity(f16):
    ident = LinearizedPoly.identity(f16)
    alpha, beta = 1, 2
    assert f16.pow(alpha, 5) != f16.pow(beta, 5)
    for i in range(2):
        phi = LinearizedPoly.monomial(f16, alpha, i) + LinearizedPoly.monomial(
            f16, beta, 2 + i
        )
        inv = binomial_inverse(f16, alpha, beta, i, 2)
        assert phi.compose(inv) == ident
        assert inv.compose(phi) == ident


def test_binomial_inverse_matches_generic_random():
    rng = random.Random(31)
    for n, m in ((4, 2), (6, 3)):
        ctx = FieldCtx(n)
        done = 0
        while done < 100:
            alpha = rng.randrange(ctx.order)
            beta = rng.randrange(ctx.order)
            i = rng.randrange(m)
            if ctx.pow(alpha, (1 << m) + 1) == ctx.pow(beta, (1 << m) + 1):
                continue
            phi = LinearizedPoly.monomial(ctx, alpha, i) + LinearizedPoly.monomial(
                ctx, beta, m + i
            )
            assert binomial_inverse(ctx, alpha, beta, i, m) == phi.inverse()
            done += 1


def test_binomial_inverse_support_shape():
    rng = random.Random(37)
    for n, m in ((4, 2), (6, 3), (8, 4)):
        ctx = FieldCtx(n)
        done = 0
        while done < 25:
            alpha = rng.randrange(ctx.order)
            beta = rng.randrange(ctx.order)
            i = rng.randrange(m)
            if ctx.pow(alpha, (1 << m) + 1) == ctx.pow(beta, (1 << m) + 1):
                continue
            phi = LinearizedPoly.monomial(ctx, alpha, i) + LinearizedPoly.monomial(
                ctx, beta, m + i
            )
            allowed = {(m - i) % n, (2 * m - i) % n}
            assert set(phi.inverse().support()) <= allowed
            done += 1


def test_binomial_inverse_rejects_equal_norms(f16):
    with pytest.raises(NotInvertibleError):
        binomial_inverse(f16, 0, 0, 0, 2)
    # alpha = beta makes the two power values coincide
    with pytest.raises(NotInvertibleError):
        binomial_inverse(f16, 5, 5, 1, 2)
    with pytest.raises(ConditionError):
        binomial_inverse(f16, 1, 2, 2, 2)  # i >= m
    with pytest.raises(ConditionError):
        binomial_inverse(f16, 1, 2, 0, 3)  # degree mismatch


# -- trinomial closed form -----------------------------------------------------------

def test_trinomial_inverse_frobenius_case(f64):
    sol = trinomial_inverse(f64, 1, 0, 0, 1)
    assert (sol.abar, sol.bbar, sol.gbar) == (0, 0, 1)
    assert sol.poly() == LinearizedPoly.monomial(f64, 1, 5)


def test_trinomial_inverse_family3_coefficients(f64):
    # alpha a root of a^2 + a + 1, coefficients (alpha, alpha, alpha+1):
    # the inverse has coefficients (alpha+1, alpha, alpha)
    roots = [a for a in f64.elements() if f64.mul(a, a) ^ a ^ 1 == 0]
    assert len(roots) == 2
    for alpha in roots:
        sol = trinomial_inverse(f64, alpha, alpha, alpha ^ 1, 1)
        assert (sol.abar, sol.bbar, sol.gbar) == (alpha ^ 1, alpha, alpha)


def test_trinomial_inverse_matches_generic_on_subfield_coeffs(f64):
    # every (alpha, beta, gamma) drawn from F_4 inside F_64
    sub = [a for a in f64.elements() if f64.in_subfield(a, 2)]
    ident = LinearizedPoly.identity(f64)
    checked = 0
    for alpha in sub:
        for beta in sub:
            for gamma in sub:
                phi = LinearizedPoly(f64, [0, alpha, 0, beta, 0, gamma])
                try:
                    sol = trinomial_inverse(f64, alpha, beta, gamma, 1)
                except NotInvertibleError:
                    continue
                inv = sol.poly()
                assert inv == phi.inverse()
                assert phi.compose(inv) == ident and inv.compose(phi) == ident
                checked += 1
    assert checked > 0


def test_trinomial_inverse_determinant_zero(f64):
    with pytest.raises(NotInvertibleError):
        trinomial_inverse(f64, 0, 0, 0, 1)
    with pytest.raises(ConditionError):
        trinomial_inverse(f64, 1, 0, 0, 2)  # degree mismatch


def test_trinomial_solution_determinant_nonzero(f64):
    sol = trinomial_inverse(f64, 2, 3, 5, 1)
    assert sol.determinant == 58
    # (1, 2, 3) makes the three composition equations linearly dependent
    with pytest.raises(NotInvertibleError):
        trinomial_inverse(f64, 1, 2, 3, 1)


# -- involution quadrinomial -----------------------------------------------------

def test_involution_quadrinomial_edge_cases(f16):
    assert involution_quadrinomial(f16, 1, 0, 1).is_identity
    assert involution_quadrinomial(f16, 0, 0, 1) == LinearizedPoly.monomial(f16, 1, 2)


def test_involution_quadrinomial_all_m1(f16):
    ident = LinearizedPoly.identity(f16)
    subs = [d for d in f16.elements() if f16.in_subfield(d, 2)]
    count = 0
    for c in (0, 1):
        for d in subs:
            quad = involution_quadrinomial(f16, c, d, 1)
            assert quad.compose(quad) == ident
            count += 1
    assert count == 8


def test_involution_quadrinomial_rejects_bad_subfields(f16):
    with pytest.raises(ConditionError):
        involution_quadrinomial(f16, 2, 0, 1)  # c outside F_2
    with pytest.raises(ConditionError):
        involution_quadrinomial(f16, 1, 2, 1)  # d outside F_4 (g is not)
    with pytest.raises(ConditionError):
        involution_quadrinomial(f16, 1, 0, 2)  # degree mismatch


# -- inverses agree with the exhaustive oracle ---------------------------------------

def test_generic_inverse_matches_exhaustive_oracle():
    rng = random.Random(41)
    ctx = FieldCtx(8)
    for _ in range(100):
        poly = random_permutation_poly(ctx, rng)
        inv = poly.inverse()
        table = exhaustive_inverse(poly)
        assert np.array_equal(inv.eval_table(), table)


# -- housekeeping -----------------------------------------------------------------

def test_context_mixing_rejected(f16, f64):
    with pytest.raises(ContextMismatchError):
        LinearizedPoly.identity(f16) + LinearizedPoly.identity(f64)
    with pytest.raises(ContextMismatchError):
        LinearizedPoly.identity(f16).compose(LinearizedPoly.identity(f64))


def test_too_many_coefficients_rejected(f16):
    with pytest.raises(ValueError):
        LinearizedPoly(f16, [1, 2, 3, 4, 5])


def test_text_and_json_forms(f16):
    poly = LinearizedPoly(f16, [3, 0, 1, 0])
    assert poly.to_text() == "03 + 01*X^4"
    assert LinearizedPoly.zero(f16).to_text() == "00"
    obj = poly.to_json()
    assert obj == {"n": 4, "coeffs": ["03", "00", "01", "00"]}
    assert LinearizedPoly.from_json(f16, obj) == poly
    with pytest.raises(ContextMismatchError):
        LinearizedPoly.from_json(FieldCtx(6), obj)
