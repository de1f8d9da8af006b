"""Exact arithmetic in GF(2^n) for 1 <= n <= 24.

Representation conventions
--------------------------
A field element is an integer in [0, 2^n): bit i is the coefficient of
g^i, where g is the residue class of x modulo the field's irreducible
polynomial (little-endian polynomial basis).  The integer encoding is a
bijection with {0, ..., 2^n - 1}, which makes elements directly usable
as truth-table indices.

The modulus is encoded the same way: bit i is the coefficient of x^i, so
x^4 + x + 1 is 0b10011.  A valid modulus has degree exactly n, constant
term 1, and is irreducible over GF(2) (verified at construction by trial
division by every polynomial of degree at most n/2).

When no modulus is given, the deterministic default is the
lexicographically smallest irreducible of degree n (smallest integer
under the encoding above, among those with constant term 1).  No lookup
table is involved, so the default is reproducible from scratch.

All arithmetic goes through a :class:`FieldCtx`.  Contexts are immutable
and safe to share between threads; every operation is pure.  For
interactive work :class:`FieldElement` wraps an integer together with
its context and overloads the arithmetic operators; mixing elements of
different contexts raises :class:`ContextMismatchError` rather than
silently reinterpreting bits.
"""

from __future__ import annotations

import operator

from .errors import ContextMismatchError

MAX_DEGREE = 24

# Discrete-log tables make scalar multiplication a pair of lookups; past
# this degree the table itself would dominate memory, and big fields are
# only touched by vectorized code paths anyway.
_LOG_TABLE_MAX_DEGREE = 12

# Tiny fields additionally get a flat 2^(2n)-entry product table, which
# the exhaustive test loops lean on heavily.
_FLAT_TABLE_MAX_DEGREE = 6


def poly_mod(a: int, b: int) -> int:
    """Remainder of a modulo b in GF(2)[x], both encoded as integers."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible(p: int) -> bool:
    """Trial-division irreducibility test for a GF(2)[x] polynomial.

    Divides by every polynomial of degree 1..deg(p)/2; suitable for the
    degrees handled here (at most 24).
    """
    n = p.bit_length() - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            if poly_mod(p, q) == 0:
                return False
    return True


_DEFAULT_MODULI: dict[int, int] = {}


def default_modulus(n: int) -> int:
    """Smallest (as integer) irreducible of degree n with constant term 1."""
    mod = _DEFAULT_MODULI.get(n)
    if mod is None:
        mod = (1 << n) | 1
        while not is_irreducible(mod):
            mod += 2
        _DEFAULT_MODULI[n] = mod
    return mod


class FieldCtx:
    """GF(2^n) with a fixed irreducible modulus.

    Core operations take and return plain integers (the element
    encoding); every one of them validates its operands against the
    context's range, so an element of a larger field cannot slip through
    unnoticed.
    """

    __slots__ = ("n", "modulus", "order", "_exp", "_log", "_flat", "_trace_mask")

    def __init__(self, n: int, modulus: int | None = None) -> None:
        n = operator.index(n)
        if not 1 <= n <= MAX_DEGREE:
            raise ValueError(f"extension degree must be in [1, {MAX_DEGREE}], got {n}")
        if modulus is None:
            modulus = default_modulus(n)
        else:
            modulus = operator.index(modulus)
            if modulus.bit_length() != n + 1:
                raise ValueError(
                    f"modulus 0b{modulus:b} does not have degree exactly {n}"
                )
            if not modulus & 1:
                raise ValueError("modulus must have constant term 1")
            if not is_irreducible(modulus):
                raise ValueError(f"modulus 0b{modulus:b} is reducible over GF(2)")
        self.n = n
        self.modulus = modulus
        self.order = 1 << n
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._flat: list[int] | None = None
        if 2 <= n <= _LOG_TABLE_MAX_DEGREE:
            self._build_log_tables()
        if n <= _FLAT_TABLE_MAX_DEGREE:
            self._flat = [
                self._mul_raw(a, b)
                for a in range(self.order)
                for b in range(self.order)
            ]
        mask = 0
        for s in range(n):
            mask |= self._trace_raw(1 << s) << s
        self._trace_mask = mask

    # -- construction helpers -------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        """Carry-less multiply with interleaved reduction."""
        acc = 0
        mod = self.modulus
        top = self.order
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= mod
        return acc

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            e >>= 1
        return r

    def _trace_raw(self, a: int) -> int:
        acc = a
        t = a
        for _ in range(self.n - 1):
            t = self._mul_raw(t, t)
            acc ^= t
        return acc

    def _multiplicative_generator(self) -> int:
        group = self.order - 1
        factors = []
        m = group
        p = 2
        while p * p <= m:
            if m % p == 0:
                factors.append(p)
                while m % p == 0:
                    m //= p
            p += 1
        if m > 1:
            factors.append(m)
        for cand in range(2, self.order):
            if all(self._pow_raw(cand, group // p) != 1 for p in factors):
                return cand
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def _build_log_tables(self) -> None:
        group = self.order - 1
        gen = self._multiplicative_generator()
        exp = [0] * (2 * group)
        log = [0] * self.order
        v = 1
        for k in range(group):
            exp[k] = v
            exp[k + group] = v
            log[v] = k
            v = self._mul_raw(v, gen)
        self._exp = exp
        self._log = log

    # -- element validation ---------------------------------------------------

    def check(self, a: int) -> int:
        """Validate an integer as an element of this field and return it."""
        a = operator.index(a)
        if a < 0 or a >= self.order:
            raise ContextMismatchError(
                f"value {a:#x} is not an element of {self.spec}"
            )
        return a

    # -- arithmetic -----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        """a + b (XOR of coefficient vectors; subtraction is the same map)."""
        return self.check(a) ^ self.check(b)

    def mul(self, a: int, b: int) -> int:
        """Product reduced modulo the field polynomial."""
        if a < 0 or b < 0 or a >= self.order or b >= self.order:
            a = self.check(a)  # raises with a precise message
            b = self.check(b)
        if self._flat is not None:
            return self._flat[(a << self.n) | b]
        if self._log is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        """Multiplicative inverse, computed as a^(2^n - 2)."""
        a = self.check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.pow(a, self.order - 2)

    def pow(self, a: int, e: int) -> int:
        """a^e by square-and-multiply, with 0^0 defined as 1."""
        a = self.check(a)
        e = operator.index(e)
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if e == 0:
            return 1
        if a == 0:
            return 0
        group = self.order - 1
        e %= group
        if e == 0:
            return 1
        if self._log is not None:
            return self._exp[(self._log[a] * e) % group]
        return self._pow_raw(a, e)

    def frob(self, a: int, k: int) -> int:
        """k-fold Frobenius a^(2^k), 0 <= k < n."""
        a = self.check(a)
        k = operator.index(k)
        if not 0 <= k < self.n:
            raise ValueError(f"Frobenius power must satisfy 0 <= k < {self.n}")
        if a == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] << k) % (self.order - 1)]
        for _ in range(k):
            a = self._mul_raw(a, a)
        return a

    def trace(self, a: int) -> int:
        """Absolute trace a + a^2 + ... + a^(2^(n-1)), a bit.

        The trace is GF(2)-linear, so it is evaluated as the parity of
        a AND'ed with a precomputed mask of basis traces; this equals the
        power sum for every element.
        """
        a = self.check(a)
        return (a & self._trace_mask).bit_count() & 1

    def in_subfield(self, a: int, d: int) -> bool:
        """True iff a lies in the subfield GF(2^d); d must divide n."""
        a = self.check(a)
        d = operator.index(d)
        if d < 1 or self.n % d != 0:
            raise ValueError(f"{d} does not divide the extension degree {self.n}")
        t = a
        for _ in range(d):
            t = self.mul(t, t)
        return t == a

    # -- iteration and formatting ----------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    @property
    def spec(self) -> str:
        """Field spec string, e.g. 'gf2:4:13' for GF(2^4) mod x^4+x+1."""
        return f"gf2:{self.n}:{self.modulus:x}"

    def elem_hex(self, a: int) -> str:
        """Zero-padded lowercase hex of an element (whole bytes)."""
        width = ((self.n + 7) // 8) * 2
        return f"{self.check(a):0{width}x}"

    def parse_element(self, s: str) -> int:
        return self.check(int(s, 16))

    def __call__(self, v: int) -> "FieldElement":
        return FieldElement(self, v)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldCtx):
            return self.n == other.n and self.modulus == other.modulus
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.modulus))

    def __repr__(self) -> str:
        return f"FieldCtx(n={self.n}, modulus={self.modulus:#x})"


def parse_field_spec(s: str) -> FieldCtx:
    """Parse 'gf2:<n>[:<modulus-hex>]' into a context."""
    parts = s.split(":")
    if parts[0] != "gf2" or len(parts) not in (2, 3):
        raise ValueError(f"bad field spec {s!r}; expected gf2:<n>[:<modulus-hex>]")
    n = int(parts[1])
    modulus = int(parts[2], 16) if len(parts) == 3 else None
    return FieldCtx(n, modulus)


class FieldElement:
    """An element bound to its context, with operator sugar.

    Binary operators demand the *same* context on both sides and raise
    :class:`ContextMismatchError` otherwise.
    """

    __slots__ = ("ctx", "val")

    def __init__(self, ctx: FieldCtx, val: int) -> None:
        self.ctx = ctx
        self.val = ctx.check(val)

    def _coerce(self, other: object) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise ContextMismatchError(
                f"cannot mix elements of {self.ctx.spec} and {other.ctx.spec}"
            )
        return other.val

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.ctx, self.val ^ self._coerce(other))

    __sub__ = __add__

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.mul(self.val, self._coerce(other)))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(
            self.ctx, self.ctx.mul(self.val, self.ctx.inv(self._coerce(other)))
        )

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.pow(self.val, e))

    def inv(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv(self.val))

    def frob(self, k: int) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.frob(self.val, k))

    def trace(self) -> int:
        return self.ctx.trace(self.val)

    def in_subfield(self, d: int) -> bool:
        return self.ctx.in_subfield(self.val, d)

    def __int__(self) -> int:
        return self.val

    __index__ = __int__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.val == other.val
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ctx, self.val))

    def __repr__(self) -> str:
        return f"FieldElement(0x{self.val:x}, {self.ctx.spec})"
