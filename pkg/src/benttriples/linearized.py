"""Linearized polynomials over GF(2^n) and their inverses.

A linearized (2-)polynomial is sum(c_i * x^(2^i) for i in range(n)) with
coefficients in GF(2^n), kept in canonical form modulo x^(2^n) - x, i.e.
exactly n coefficient slots.  Such a polynomial induces a GF(2)-linear
map on the field, so permutation testing and generic inversion reduce to
n x n binary linear algebra; closed-form inverses for binomials and for
trinomials of the shape used in the constructions are provided alongside
the generic matrix route.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

import numpy as np

from .errors import ContextMismatchError, ConditionError, NotInvertibleError
from .field import FieldCtx


# -- GF(2) linear algebra on integer bit rows ---------------------------------

def gf2_rank(vectors: list[int]) -> int:
    """Rank of a set of GF(2) vectors encoded as integers."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            lead = v.bit_length() - 1
            if lead in basis:
                v ^= basis[lead]
            else:
                basis[lead] = v
                break
    return len(basis)


def gf2_matrix_inverse(columns: list[int], n: int) -> list[int] | None:
    """Invert the n x n GF(2) matrix given by its columns (as bit ints).

    Returns the inverse matrix as columns, or None when singular.
    """
    # Row i of the matrix, augmented with row i of the identity.
    rows = []
    for i in range(n):
        r = 0
        for j in range(n):
            r |= ((columns[j] >> i) & 1) << j
        rows.append(r | (1 << (n + i)))
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if (rows[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and (rows[r] >> col) & 1:
                rows[r] ^= rows[col]
    inv_cols = []
    for t in range(n):
        c = 0
        for i in range(n):
            c |= ((rows[i] >> (n + t)) & 1) << i
        inv_cols.append(c)
    return inv_cols


def _field_matrix_inverse(ctx: FieldCtx, rows: list[list[int]]) -> list[list[int]]:
    """Invert a square matrix over GF(2^n) by Gauss-Jordan elimination."""
    k = len(rows)
    aug = [list(r) + [1 if j == i else 0 for j in range(k)] for i, r in enumerate(rows)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col]), None)
        if pivot is None:
            raise NotInvertibleError("matrix over the field is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pinv = ctx.inv(aug[col][col])
        aug[col] = [ctx.mul(pinv, e) for e in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [e ^ ctx.mul(f, p) for e, p in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


# The Moore matrix [ (g^t)^(2^i) ] of the polynomial basis depends only on
# the field, so its inverse is shared by every coefficient recovery.
_MOORE_INVERSE_CACHE: dict[FieldCtx, list[list[int]]] = {}


def _moore_inverse(ctx: FieldCtx) -> list[list[int]]:
    cached = _MOORE_INVERSE_CACHE.get(ctx)
    if cached is None:
        rows = []
        for t in range(ctx.n):
            b = 1 << t
            row = []
            for _ in range(ctx.n):
                row.append(b)
                b = ctx.mul(b, b)
            rows.append(row)
        cached = _field_matrix_inverse(ctx, rows)
        _MOORE_INVERSE_CACHE[ctx] = cached
    return cached


def field_linsolve(
    ctx: FieldCtx, matrix: list[list[int]], rhs: list[int]
) -> list[int] | None:
    """Solve a square linear system over GF(2^n) by Gaussian elimination.

    Pivots on the first nonzero entry in each column (a finite field has
    no useful notion of magnitude); arithmetic is exact.  Returns None
    when the matrix is singular.
    """
    k = len(matrix)
    m = [list(row) for row in matrix]
    v = list(rhs)
    for col in range(k):
        pivot = None
        for r in range(col, k):
            if m[r][col]:
                pivot = r
                break
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        v[col], v[pivot] = v[pivot], v[col]
        pinv = ctx.inv(m[col][col])
        m[col] = [ctx.mul(pinv, e) for e in m[col]]
        v[col] = ctx.mul(pinv, v[col])
        for r in range(k):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [e ^ ctx.mul(f, p) for e, p in zip(m[r], m[col])]
                v[r] ^= ctx.mul(f, v[col])
    return v


# -- the polynomial type -------------------------------------------------------

class LinearizedPoly:
    """Canonical linearized polynomial: n coefficients, coeffs[i] on x^(2^i)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs) -> None:
        coeffs = [ctx.check(c) for c in coeffs]
        if len(coeffs) > ctx.n:
            raise ValueError(
                f"at most {ctx.n} coefficient slots in GF(2^{ctx.n}), got {len(coeffs)}"
            )
        coeffs.extend([0] * (ctx.n - len(coeffs)))
        self.ctx = ctx
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "LinearizedPoly":
        return cls(ctx, [])

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "LinearizedPoly":
        return cls(ctx, [1])

    @classmethod
    def monomial(cls, ctx: FieldCtx, coeff: int, k: int) -> "LinearizedPoly":
        """coeff * x^(2^k), with k taken modulo n."""
        k = operator.index(k) % ctx.n
        coeffs = [0] * ctx.n
        coeffs[k] = ctx.check(coeff)
        return cls(ctx, coeffs)

    def _require_same_ctx(self, other: "LinearizedPoly") -> None:
        if not isinstance(other, LinearizedPoly):
            raise TypeError(f"expected LinearizedPoly, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatchError(
                f"cannot combine polynomials over {self.ctx.spec} and {other.ctx.spec}"
            )

    # -- evaluation and algebra ------------------------------------------------

    def __call__(self, x: int) -> int:
        """Evaluate at a field element: sum of coeffs[i] * x^(2^i)."""
        ctx = self.ctx
        acc = 0
        xx = ctx.check(x)
        for c in self.coeffs:
            if c:
                acc ^= ctx.mul(c, xx)
            xx = ctx.mul(xx, xx)
        return acc

    def eval_table(self) -> np.ndarray:
        """Values on the whole field as an int32 array indexed by element.

        Filled by extending from the basis images through GF(2)-linearity,
        which keeps the cost at n field products plus 2^n XORs.
        """
        n = self.ctx.n
        table = np.zeros(1 << n, dtype=np.int32)
        for s in range(n):
            half = 1 << s
            table[half : 2 * half] = table[:half] ^ self(1 << s)
        return table

    def __add__(self, other: "LinearizedPoly") -> "LinearizedPoly":
        self._require_same_ctx(other)
        return LinearizedPoly(
            self.ctx, [a ^ b for a, b in zip(self.coeffs, other.coeffs)]
        )

    def compose(self, other: "LinearizedPoly") -> "LinearizedPoly":
        """self(other(x)) reduced modulo x^(2^n) - x.

        The coefficient on x^(2^k) is the sum over i + j = k (mod n) of
        coeffs[i] * other.coeffs[j]^(2^i).
        """
        self._require_same_ctx(other)
        ctx = self.ctx
        n = ctx.n
        out = [0] * n
        row = list(other.coeffs)  # other's coefficients raised to 2^i
        for i in range(n):
            ci = self.coeffs[i]
            if ci:
                for j in range(n):
                    cj = row[j]
                    if cj:
                        k = i + j
                        if k >= n:
                            k -= n
                        out[k] ^= ctx.mul(ci, cj)
            row = [ctx.mul(c, c) for c in row]
        return LinearizedPoly(ctx, out)

    # -- permutation structure ---------------------------------------------------

    def matrix_columns(self) -> list[int]:
        """The induced GF(2)-linear map in the polynomial basis.

        Column j (as a bit integer) is the image of the basis element g^j.
        """
        return [self(1 << j) for j in range(self.ctx.n)]

    def is_permutation(self) -> bool:
        """True iff the induced linear map has trivial kernel (full rank)."""
        return gf2_rank(self.matrix_columns()) == self.ctx.n

    def inverse(self) -> "LinearizedPoly":
        """Compositional inverse of a permutation polynomial.

        Inverts the binary matrix of the map, then recovers linearized
        coefficients by solving the Moore system built from the inverse
        map's values on the polynomial basis.
        """
        ctx = self.ctx
        n = ctx.n
        inv_cols = gf2_matrix_inverse(self.matrix_columns(), n)
        if inv_cols is None:
            raise NotInvertibleError(
                f"{self!r} is not a permutation of GF(2^{n})"
            )
        # The Moore matrix of a basis is invertible, so a true inverse map
        # always yields coefficients: solve by multiplying with its cached
        # inverse.
        minv = _moore_inverse(ctx)
        mul = ctx.mul
        sol = [0] * n
        for i in range(n):
            acc = 0
            row = minv[i]
            for j in range(n):
                w = inv_cols[j]
                if w and row[j]:
                    acc ^= mul(row[j], w)
            sol[i] = acc
        return LinearizedPoly(ctx, sol)

    # -- structure queries ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def is_identity(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinearizedPoly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, self.coeffs))

    # -- formatting -------------------------------------------------------------

    def to_text(self) -> str:
        """Readable form 'c0 + c1*X^2 + c2*X^4 + ...' with hex coefficients.

        The bare leading term is the coefficient of X^(2^0) = X.
        """
        ctx = self.ctx
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(ctx.elem_hex(c))
            else:
                parts.append(f"{ctx.elem_hex(c)}*X^{1 << i}")
        return " + ".join(parts) if parts else ctx.elem_hex(0)

    def to_json(self) -> dict:
        return {"n": self.ctx.n, "coeffs": [self.ctx.elem_hex(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, ctx: FieldCtx, obj: dict) -> "LinearizedPoly":
        if obj.get("n") != ctx.n:
            raise ContextMismatchError(
                f"polynomial declares n={obj.get('n')}, context has n={ctx.n}"
            )
        return cls(ctx, [ctx.parse_element(c) for c in obj["coeffs"]])

    def __repr__(self) -> str:
        return f"LinearizedPoly({self.ctx.spec}, {self.to_text()})"


# -- closed-form inverses -------------------------------------------------------

def binomial_inverse(
    ctx: FieldCtx, alpha: int, beta: int, i: int, m: int
) -> LinearizedPoly:
    """Inverse of alpha*x^(2^i) + beta*x^(2^(m+i)) over GF(2^(2m)).

    Requires alpha^(2^m+1) != beta^(2^m+1); the inverse is then the
    binomial gamma*x^(2^(m-i)) + delta*x^(2^(2m-i)) with

        gamma = (beta^(2^m) / s)^(2^(m-i)),
        delta = (alpha / s)^(2^(m-i)),       s = alpha^(2^m+1) + beta^(2^m+1).

    Degenerate alpha = 0 or beta = 0 inputs are accepted as long as the
    inequality holds; the result collapses to a monomial inverse.
    """
    m = operator.index(m)
    i = operator.index(i)
    if m < 1 or ctx.n != 2 * m:
        raise ConditionError(f"field degree must be 2m = {2 * m}, context has {ctx.n}")
    if not 0 <= i < m:
        raise ConditionError(f"exponent index must satisfy 0 <= i < m = {m}")
    alpha = ctx.check(alpha)
    beta = ctx.check(beta)
    qm = 1 << m
    s = ctx.pow(alpha, qm + 1) ^ ctx.pow(beta, qm + 1)
    if s == 0:
        raise NotInvertibleError(
            "alpha^(2^m+1) = beta^(2^m+1): the binomial has no binomial inverse"
        )
    s_inv = ctx.inv(s)
    lift = 1 << (m - i)
    gamma = ctx.pow(ctx.mul(ctx.pow(beta, qm), s_inv), lift)
    delta = ctx.pow(ctx.mul(alpha, s_inv), lift)
    coeffs = [0] * ctx.n
    coeffs[(m - i) % ctx.n] ^= gamma
    coeffs[(2 * m - i) % ctx.n] ^= delta
    return LinearizedPoly(ctx, coeffs)


@dataclass(frozen=True)
class TrinomialInverseSolution:
    """Coefficients of the trinomial inverse, plus the system determinant."""

    ctx: FieldCtx
    m: int
    abar: int
    bbar: int
    gbar: int
    determinant: int

    def poly(self) -> LinearizedPoly:
        coeffs = [0] * self.ctx.n
        coeffs[self.m] = self.abar
        coeffs[3 * self.m] = self.bbar
        coeffs[5 * self.m] = self.gbar
        return LinearizedPoly(self.ctx, coeffs)


def trinomial_inverse(
    ctx: FieldCtx, alpha: int, beta: int, gamma: int, m: int
) -> TrinomialInverseSolution:
    """Inverse of alpha*x^(2^m) + beta*x^(2^(3m)) + gamma*x^(2^(5m)) over GF(2^(6m)).

    Composing two trinomials of this shape and reducing mod x^(2^(6m)) - x
    leaves terms on x, x^(2^(2m)) and x^(2^(4m)) only, so the inverse
    coefficients (abar, bbar, gbar) solve the 3x3 system

        abar*gamma^(2^m) + bbar*beta^(2^(3m)) + gbar*alpha^(2^(5m)) = 1
        abar*alpha^(2^m) + bbar*gamma^(2^(3m)) + gbar*beta^(2^(5m)) = 0
        abar*beta^(2^m)  + bbar*alpha^(2^(3m)) + gbar*gamma^(2^(5m)) = 0

    solved here by Gaussian elimination.  A zero determinant means no
    inverse of this trinomial shape exists.
    """
    m = operator.index(m)
    if m < 1 or ctx.n != 6 * m:
        raise ConditionError(f"field degree must be 6m = {6 * m}, context has {ctx.n}")
    alpha = ctx.check(alpha)
    beta = ctx.check(beta)
    gamma = ctx.check(gamma)
    e1, e3, e5 = 1 << m, 1 << (3 * m), 1 << (5 * m)
    a1, a3, a5 = ctx.pow(alpha, e1), ctx.pow(alpha, e3), ctx.pow(alpha, e5)
    b1, b3, b5 = ctx.pow(beta, e1), ctx.pow(beta, e3), ctx.pow(beta, e5)
    g1, g3, g5 = ctx.pow(gamma, e1), ctx.pow(gamma, e3), ctx.pow(gamma, e5)
    rows = [[g1, b3, a5], [a1, g3, b5], [b1, a3, g5]]
    mul = ctx.mul
    det = (
        mul(g1, mul(g3, g5) ^ mul(b5, a3))
        ^ mul(b3, mul(a1, g5) ^ mul(b5, b1))
        ^ mul(a5, mul(a1, a3) ^ mul(g3, b1))
    )
    if det == 0:
        raise NotInvertibleError(
            "composition system is singular: no trinomial inverse of this shape"
        )
    sol = field_linsolve(ctx, rows, [1, 0, 0])
    assert sol is not None
    return TrinomialInverseSolution(ctx, m, sol[0], sol[1], sol[2], det)


def involution_quadrinomial(ctx: FieldCtx, c: int, d: int, m: int) -> LinearizedPoly:
    """The involution c*x + d*x^q + (c+1)*x^(q^2) + d*x^(q^3) with q = 2^m.

    Requires c in GF(2^m) and d in GF(2^(2m)) inside GF(2^(4m)); squaring
    the map then cancels every cross term in characteristic 2, so it is
    its own compositional inverse.
    """
    m = operator.index(m)
    if m < 1 or ctx.n != 4 * m:
        raise ConditionError(f"field degree must be 4m = {4 * m}, context has {ctx.n}")
    c = ctx.check(c)
    d = ctx.check(d)
    if not ctx.in_subfield(c, m):
        raise ConditionError(f"coefficient {ctx.elem_hex(c)} is not in GF(2^{m})")
    if not ctx.in_subfield(d, 2 * m):
        raise ConditionError(f"coefficient {ctx.elem_hex(d)} is not in GF(2^{2 * m})")
    coeffs = [0] * ctx.n
    coeffs[0] = c
    coeffs[m] = d
    coeffs[2 * m] = c ^ 1
    coeffs[3 * m] = d
    return LinearizedPoly(ctx, coeffs)
