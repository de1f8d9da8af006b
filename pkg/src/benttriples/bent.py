"""Boolean functions on GF(2^n) x GF(2^n), their synthesis and spectra.

Conventions
-----------
A Boolean function f(x, y) of 2n variables is stored as a truth table of
2^(2n) bits with x packed into the high index bits: bit (int(x) << n) | int(y)
is f(x, y).  Its Walsh-Hadamard spectrum is indexed the same way, entry
(int(a) << n) | int(b) being

    W(a, b) = sum over (x, y) of (-1)^(f(x, y) + Tr(a x) + Tr(b y)),

with Tr the absolute trace of GF(2^n).  Spectra are exact 32-bit signed
integers (|W| <= 2^(2n) <= 2^24); Parseval-style accumulations are done
in 64 bits.

The transform itself is the plain +-1 butterfly transform of size
2^(2n).  The field's trace pairing enters through a basis change: with
G the GF(2) Gram matrix G[s][t] = Tr(g^s g^t), the character Tr(a x) is
the standard dot product <Ga, x> of bit vectors, so the trace-indexed
spectrum is the butterfly output re-indexed through a -> Ga on both
index halves.  The re-indexing map is a permutation because the trace
form is non-degenerate; agreement with the literal definition is a test
target, not an assumption.

Synthesis walks neither traces nor products per point: for fixed c the
bit Tr(x c) is the parity of x AND mask(c), where bit s of mask(c) is
Tr(g^s c), so truth tables come out of vectorized parity lookups over
precomputed per-image masks.
"""

from __future__ import annotations

import numpy as np

from .errors import NotInvertibleError, ResourceLimitError
from .field import FieldCtx, parse_field_spec
from .linearized import LinearizedPoly
from .triples import PermutationTriple, triple_to_json

SYNTH_MAX_DEGREE = 12  # functions of up to 24 variables


class BooleanFunction:
    """Truth table over GF(2^n) x GF(2^n) as a 0/1 byte vector."""

    __slots__ = ("ctx", "table")

    def __init__(self, ctx: FieldCtx, table) -> None:
        if ctx.n > SYNTH_MAX_DEGREE:
            raise ResourceLimitError(
                f"in-memory truth tables stop at degree {SYNTH_MAX_DEGREE}, got {ctx.n}"
            )
        table = np.ascontiguousarray(table, dtype=np.uint8)
        if table.shape != (1 << (2 * ctx.n),):
            raise ValueError(
                f"truth table must have length 2^(2n) = {1 << (2 * ctx.n)}"
            )
        if table.max(initial=0) > 1:
            raise ValueError("truth table entries must be bits")
        self.ctx = ctx
        self.table = table

    @classmethod
    def constant(cls, ctx: FieldCtx, bit: int) -> "BooleanFunction":
        return cls(ctx, np.full(1 << (2 * ctx.n), bit & 1, dtype=np.uint8))

    def weight(self) -> int:
        return int(self.table.sum())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BooleanFunction):
            return self.ctx == other.ctx and bool(np.array_equal(self.table, other.table))
        return NotImplemented

    def __repr__(self) -> str:
        return f"BooleanFunction({self.ctx.spec}, {2 * self.ctx.n} variables)"

    def table_hex(self) -> str:
        """Little-endian nibble stream: hex digit j holds table bits 4j..4j+3,
        least significant bit first."""
        packed = np.packbits(self.table, bitorder="little").tobytes()
        digits = []
        for b in packed:
            digits.append(f"{b & 0xf:x}")
            digits.append(f"{b >> 4:x}")
        return "".join(digits)[: self.table.size // 4]

    @classmethod
    def from_table_hex(cls, ctx: FieldCtx, s: str) -> "BooleanFunction":
        size = 1 << (2 * ctx.n)
        if len(s) != size // 4:
            raise ValueError(f"expected {size // 4} hex digits, got {len(s)}")
        if len(s) % 2:
            s += "0"
        raw = bytes(int(s[k + 1] + s[k], 16) for k in range(0, len(s), 2))
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return cls(ctx, bits[:size])


class WalshSpectrum:
    """Exact integer spectrum, indexed like the truth table."""

    __slots__ = ("n", "values", "max_abs")

    def __init__(self, n: int, values: np.ndarray) -> None:
        self.n = n
        self.values = values
        self.max_abs = int(np.max(np.abs(values)))

    def min_abs(self) -> int:
        return int(np.min(np.abs(self.values)))

    def weight(self) -> int:
        """Hamming weight of the underlying function, read off W(0,0)."""
        return ((1 << (2 * self.n)) - int(self.values[0])) // 2

    def summary(self) -> dict:
        return {
            "max_abs": self.max_abs,
            "is_bent": is_bent(self),
            "nonlinearity": nonlinearity(self),
            "weight": self.weight(),
        }

    def __repr__(self) -> str:
        return f"WalshSpectrum(2n={2 * self.n}, max_abs={self.max_abs})"


# -- the transform core ----------------------------------------------------------

def fwht(values: np.ndarray) -> np.ndarray:
    """In-place fast Walsh-Hadamard transform, natural (bit-dot) ordering.

    Output[u] = sum over v of (-1)^popcount(u AND v) * input[v].  The
    array length must be a power of two; the transform runs as log2(N)
    vectorized butterfly sweeps with one N/2 scratch buffer, which keeps
    a size-2^24 int32 transform around a second on commodity hardware.
    The array is modified and returned.
    """
    size = values.size
    if size & (size - 1):
        raise ValueError("transform length must be a power of two")
    h = 1
    while h < size:
        pairs = values.reshape(-1, 2, h)
        a = pairs[:, 0, :]
        b = pairs[:, 1, :]
        diff = a - b
        np.add(a, b, out=a)
        b[:] = diff
        h <<= 1
    return values


def _parity_table(size: int) -> np.ndarray:
    par = np.zeros(size, dtype=np.uint8)
    h = 1
    while h < size:
        par[h : 2 * h] = par[:h] ^ 1
        h <<= 1
    return par


def _trace_masks(ctx: FieldCtx) -> np.ndarray:
    """mask[c] with bit s = Tr(g^s * c), for every field element c."""
    n, size = ctx.n, ctx.order
    par = _parity_table(size)
    tmask = ctx._trace_mask
    masks = np.zeros(size, dtype=np.int32)
    for s in range(n):
        prod = np.zeros(size, dtype=np.int32)  # c -> g^s * c, by linearity in c
        for t in range(n):
            half = 1 << t
            prod[half : 2 * half] = prod[:half] ^ ctx.mul(1 << s, 1 << t)
        masks |= par[prod & tmask].astype(np.int32) << s
    return masks


def _gram_index_map(ctx: FieldCtx) -> np.ndarray:
    """e -> G e over GF(2), G the trace Gram matrix of the polynomial basis."""
    n, size = ctx.n, ctx.order
    par = _parity_table(size)
    idx = np.arange(size, dtype=np.int32)
    gmap = np.zeros(size, dtype=np.int32)
    for s in range(n):
        row = 0
        for t in range(n):
            row |= ctx.trace(ctx.mul(1 << s, 1 << t)) << t
        gmap |= par[idx & row].astype(np.int32) << s
    return gmap


# -- synthesis ---------------------------------------------------------------------

def synthesize(t: PermutationTriple) -> BooleanFunction:
    """Boolean function of a triple: majority of the three trace bits.

    f(x, y) = t1 t2 + t2 t3 + t1 t3 over GF(2), t_i = Tr(x * Phi_i(y)).
    The function is bent exactly when the triple has the sum-inverse
    property.
    """
    ctx = t.ctx
    if ctx.n > SYNTH_MAX_DEGREE:
        raise ResourceLimitError(
            f"synthesis stops at degree {SYNTH_MAX_DEGREE}, got {ctx.n}"
        )
    masks = _trace_masks(ctx)
    par = _parity_table(ctx.order)
    xs = np.arange(ctx.order, dtype=np.int32)[:, None]
    m1, m2, m3 = (masks[p.eval_table()][None, :] for p in t.polys())
    t1 = par[xs & m1]
    t2 = par[xs & m2]
    t3 = par[xs & m3]
    g = (t1 & t2) ^ (t2 & t3) ^ (t1 & t3)
    return BooleanFunction(ctx, g.reshape(-1))


def mm_synthesize(phi: LinearizedPoly, g_table) -> BooleanFunction:
    """Maiorana-McFarland function Tr(x * phi(y)) + g(y) for a permutation phi.

    Bent for every permutation phi and every choice of g.
    """
    ctx = phi.ctx
    if ctx.n > SYNTH_MAX_DEGREE:
        raise ResourceLimitError(
            f"synthesis stops at degree {SYNTH_MAX_DEGREE}, got {ctx.n}"
        )
    if not phi.is_permutation():
        raise NotInvertibleError("phi must be a permutation of the field")
    g_arr = np.ascontiguousarray(g_table, dtype=np.uint8)
    if g_arr.shape != (ctx.order,) or g_arr.max(initial=0) > 1:
        raise ValueError(f"g must be a bit vector of length 2^n = {ctx.order}")
    masks = _trace_masks(ctx)
    par = _parity_table(ctx.order)
    xs = np.arange(ctx.order, dtype=np.int32)[:, None]
    table = par[xs & masks[phi.eval_table()][None, :]] ^ g_arr[None, :]
    return BooleanFunction(ctx, table.reshape(-1))


# -- spectra and certification ------------------------------------------------------

def walsh_spectrum(f: BooleanFunction) -> WalshSpectrum:
    """Exact spectrum via the fast transform in the trace-dual indexing."""
    n = f.ctx.n
    signs = 1 - 2 * f.table.astype(np.int32)
    fwht(signs)
    gmap = _gram_index_map(f.ctx)
    idx = (gmap.astype(np.int64) << n)[:, None] | gmap[None, :]
    return WalshSpectrum(n, signs[idx.reshape(-1)])


def _spectrum_of(f) -> WalshSpectrum:
    return f if isinstance(f, WalshSpectrum) else walsh_spectrum(f)


def is_bent(f) -> bool:
    """True iff every spectrum value is +-2^n (functions of 2n variables)."""
    spec = _spectrum_of(f)
    flat = 1 << spec.n
    return spec.max_abs == flat and spec.min_abs() == flat


def nonlinearity(f) -> int:
    """Distance to the affine functions: 2^(2n-1) - max|W|/2."""
    spec = _spectrum_of(f)
    return (1 << (2 * spec.n - 1)) - spec.max_abs // 2


# -- serialization -----------------------------------------------------------------

def function_to_json(f: BooleanFunction, origin: dict | PermutationTriple | None = None) -> dict:
    if isinstance(origin, PermutationTriple):
        origin = triple_to_json(origin)
    return {
        "format": "boolfunc",
        "n": f.ctx.n,
        "field": f.ctx.spec,
        "origin": origin,
        "table_hex": f.table_hex(),
    }


def function_from_json(obj: dict) -> BooleanFunction:
    if obj.get("format") != "boolfunc":
        raise ValueError("not a Boolean function document (missing format: boolfunc)")
    ctx = parse_field_spec(obj["field"])
    if obj.get("n") != ctx.n:
        raise ValueError("function header n disagrees with its field spec")
    return BooleanFunction.from_table_hex(ctx, obj["table_hex"])


def spectrum_csv_lines(spec: WalshSpectrum):
    yield "index,value"
    for i, v in enumerate(spec.values):
        yield f"{i},{int(v)}"
