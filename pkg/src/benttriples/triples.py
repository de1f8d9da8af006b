"""Triples of linearized permutations and the structure behind them.

Five parametric families of triples (Phi1, Phi2, Phi3) are constructed
here, each over GF(2^(4m)) or GF(2^(6m)).  What matters about a triple
is the sum-inverse property: the sum Psi = Phi1 + Phi2 + Phi3 must be a
permutation and its compositional inverse must equal the sum of the
three compositional inverses.  Triples with this property synthesize
bent functions (see the bent module); triples whose pairwise agreement
sets fail to cover the field are additionally not certified as
Maiorana-McFarland by the covering criterion.

Each family constructor validates its parameter conditions exactly and
raises ConditionError otherwise; enumerate_params materializes the full
valid parameter list for small fields, and search_triples explores
custom coefficient shapes for sum-inverse triples by exhaustive or
seeded random search.
"""

from __future__ import annotations

import itertools
import operator
import random
from dataclasses import dataclass, field as dc_field

from .errors import ContextMismatchError, ConditionError, ResourceLimitError
from .field import FieldCtx, parse_field_spec
from .linearized import LinearizedPoly, gf2_rank

FAMILY_TAGS = ("fam1", "fam2", "fam3i", "fam3ii", "fam4", "fam5", "custom")

SEARCH_MAX_DEGREE = 8
ENUMERATION_MAX_DEGREE = 16


@dataclass(frozen=True)
class PermutationTriple:
    ctx: FieldCtx
    phi1: LinearizedPoly
    phi2: LinearizedPoly
    phi3: LinearizedPoly
    family: str = "custom"
    params: dict = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.family not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.family!r}")
        for p in (self.phi1, self.phi2, self.phi3):
            if p.ctx != self.ctx:
                raise ContextMismatchError("triple members must share one field context")

    def polys(self) -> tuple[LinearizedPoly, LinearizedPoly, LinearizedPoly]:
        return (self.phi1, self.phi2, self.phi3)

    def psi(self) -> LinearizedPoly:
        """The sum Phi1 + Phi2 + Phi3."""
        return self.phi1 + self.phi2 + self.phi3


@dataclass(frozen=True)
class TripleReport:
    """Outcome of the sum-inverse property check."""

    each_permutation: tuple[bool, bool, bool]
    sum_is_permutation: bool
    inverse_sum_identity: bool
    satisfied: bool

    def to_dict(self) -> dict:
        return {
            "each_permutation": list(self.each_permutation),
            "sum_is_permutation": self.sum_is_permutation,
            "inverse_sum_identity": self.inverse_sum_identity,
            "satisfied": self.satisfied,
        }


@dataclass(frozen=True)
class AgreementReport:
    """Sizes of the pairwise agreement sets E_ij = {x : Phi_i(x) = Phi_j(x)}."""

    size_12: int
    size_13: int
    size_23: int
    size_union: int
    covers_field: bool
    mm_sufficient: bool

    def to_dict(self) -> dict:
        return {
            "size_12": self.size_12,
            "size_13": self.size_13,
            "size_23": self.size_23,
            "size_union": self.size_union,
            "covers_field": self.covers_field,
            "mm_sufficient": self.mm_sufficient,
        }


def verify_triple(t: PermutationTriple) -> TripleReport:
    """Check the sum-inverse property of a triple, exactly.

    Condition (1): each Phi_i and the sum Psi are permutations.
    Condition (2): Psi composed with Phi1^-1 + Phi2^-1 + Phi3^-1 is the
    identity polynomial, i.e. Psi^-1 equals the sum of the inverses.
    Both are decided by exact linear algebra; nothing is sampled.
    """
    perms = tuple(p.is_permutation() for p in t.polys())
    psi = t.psi()
    sum_perm = psi.is_permutation()
    inverse_sum_identity = False
    if all(perms) and sum_perm:
        inv_sum = t.phi1.inverse() + t.phi2.inverse() + t.phi3.inverse()
        inverse_sum_identity = psi.compose(inv_sum).is_identity
    return TripleReport(
        each_permutation=perms,
        sum_is_permutation=sum_perm,
        inverse_sum_identity=inverse_sum_identity,
        satisfied=all(perms) and sum_perm and inverse_sum_identity,
    )


def agreement_report(t: PermutationTriple, method: str = "auto") -> AgreementReport:
    """Exact sizes of the pairwise agreement sets and of their union.

    'scan' enumerates the field (the default up to degree 16); 'rank'
    sizes each agreement set as the kernel of the linearized difference
    and combines them by inclusion-exclusion on stacked kernels.  Both
    produce identical exact counts.
    """
    n = t.ctx.n
    if method == "auto":
        method = "scan" if n <= 16 else "rank"
    if method == "scan":
        t1, t2, t3 = (p.eval_table() for p in t.polys())
        a12 = t1 == t2
        a13 = t1 == t3
        a23 = t2 == t3
        s12 = int(a12.sum())
        s13 = int(a13.sum())
        s23 = int(a23.sum())
        union = int((a12 | a13 | a23).sum())
    elif method == "rank":
        c12 = (t.phi1 + t.phi2).matrix_columns()
        c13 = (t.phi1 + t.phi3).matrix_columns()
        c23 = (t.phi2 + t.phi3).matrix_columns()

        def kdim(*col_sets: list[int]) -> int:
            stacked = [
                sum(cols[j] << (n * pos) for pos, cols in enumerate(col_sets))
                for j in range(n)
            ]
            return n - gf2_rank(stacked)

        s12, s13, s23 = (1 << kdim(c12), 1 << kdim(c13), 1 << kdim(c23))
        union = (
            s12
            + s13
            + s23
            - (1 << kdim(c12, c13))
            - (1 << kdim(c12, c23))
            - (1 << kdim(c13, c23))
            + (1 << kdim(c12, c13, c23))
        )
    else:
        raise ValueError(f"unknown method {method!r}")
    covers = union == t.ctx.order
    return AgreementReport(s12, s13, s23, union, covers, covers)


# -- the five families ----------------------------------------------------------

def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConditionError(message)


def _require_degree(ctx: FieldCtx, m: int, factor: int) -> int:
    m = operator.index(m)
    _require(m >= 1, f"m must be a positive integer, got {m}")
    _require(
        ctx.n == factor * m,
        f"field degree must be {factor}m = {factor * m}, context has {ctx.n}",
    )
    return m


def family1(ctx: FieldCtx, m: int, lam: int) -> PermutationTriple:
    """Monomial triple (x^(2^(2m)), lam*x^(2^m), lam*x^(2^(3m))) over GF(2^(4m)).

    Requires lam^(2^m + 1) = 1.
    """
    m = _require_degree(ctx, m, 4)
    lam = ctx.check(lam)
    _require(
        ctx.pow(lam, (1 << m) + 1) == 1,
        f"lambda^(2^m+1) = 1 fails for lambda = {ctx.elem_hex(lam)}",
    )
    return PermutationTriple(
        ctx,
        LinearizedPoly.monomial(ctx, 1, 2 * m),
        LinearizedPoly.monomial(ctx, lam, m),
        LinearizedPoly.monomial(ctx, lam, 3 * m),
        family="fam1",
        params={"lambda": lam},
    )


def family2(ctx: FieldCtx, m: int, alpha: int) -> PermutationTriple:
    """Monomial plus mutually inverse binomials over GF(2^(4m)).

    (x^(2^(2m)), a*x^(2^m) + (a+1)*x^(2^(3m)), (a+1)*x^(2^m) + a*x^(2^(3m)))
    for any a in the subfield GF(2^m).
    """
    m = _require_degree(ctx, m, 4)
    alpha = ctx.check(alpha)
    _require(
        ctx.in_subfield(alpha, m),
        f"alpha = {ctx.elem_hex(alpha)} is not in GF(2^{m})",
    )
    phi2 = [0] * ctx.n
    phi2[m] = alpha
    phi2[3 * m] = alpha ^ 1
    phi3 = [0] * ctx.n
    phi3[m] = alpha ^ 1
    phi3[3 * m] = alpha
    return PermutationTriple(
        ctx,
        LinearizedPoly.monomial(ctx, 1, 2 * m),
        LinearizedPoly(ctx, phi2),
        LinearizedPoly(ctx, phi3),
        family="fam2",
        params={"alpha": alpha},
    )


def family3(ctx: FieldCtx, m: int, variant: str, alpha: int) -> PermutationTriple:
    """Monomial plus mutually inverse trinomials over GF(2^(6m)).

    (x^(2^m), a*x^(2^m) + b*x^(2^(3m)) + (a+1)*x^(2^(5m)),
             (a+1)*x^(2^m) + b*x^(2^(3m)) + a*x^(2^(5m)))
    with a in GF(2^(2m)) and either
      variant 'i':  b = a and a^(2^m) + a^(2^m - 1) + 1 = 0 (so a != 0), or
      variant 'ii': b = a + 1 and a^(2^m + 1) = 1, a != 1.
    """
    m = _require_degree(ctx, m, 6)
    alpha = ctx.check(alpha)
    _require(variant in ("i", "ii"), f"variant must be 'i' or 'ii', got {variant!r}")
    _require(
        ctx.in_subfield(alpha, 2 * m),
        f"alpha = {ctx.elem_hex(alpha)} is not in GF(2^{2 * m})",
    )
    qm = 1 << m
    if variant == "i":
        _require(alpha != 0, "variant 'i' needs alpha != 0")
        _require(
            ctx.pow(alpha, qm) ^ ctx.pow(alpha, qm - 1) ^ 1 == 0,
            f"alpha^(2^m) + alpha^(2^m - 1) + 1 = 0 fails for alpha = {ctx.elem_hex(alpha)}",
        )
        beta = alpha
    else:
        _require(
            ctx.pow(alpha, qm + 1) == 1 and alpha != 1,
            f"alpha^(2^m+1) = 1, alpha != 1 fails for alpha = {ctx.elem_hex(alpha)}",
        )
        beta = alpha ^ 1
    phi2 = [0] * ctx.n
    phi2[m] = alpha
    phi2[3 * m] = beta
    phi2[5 * m] = alpha ^ 1
    phi3 = [0] * ctx.n
    phi3[m] = alpha ^ 1
    phi3[3 * m] = beta
    phi3[5 * m] = alpha
    return PermutationTriple(
        ctx,
        LinearizedPoly.monomial(ctx, 1, m),
        LinearizedPoly(ctx, phi2),
        LinearizedPoly(ctx, phi3),
        family="fam3i" if variant == "i" else "fam3ii",
        params={"alpha": alpha},
    )


def family4(ctx: FieldCtx, m: int, alpha: int, beta: int) -> PermutationTriple:
    """Binomial with its square and cube under composition, over GF(2^(4m)).

    Phi1 = a*x + b*x^(2^m); Phi2 = Phi1 o Phi1; Phi3 = Phi1 o Phi1 o Phi1,
    for a in GF(2^m), b in GF(2^(2m)) with b^(2^m + 1) = a^2 + 1.  The
    pair (a, b) = (1, 0) satisfies the equation but collapses all three
    maps to the identity (their agreement sets then cover the field), so
    it is rejected.
    """
    m = _require_degree(ctx, m, 4)
    alpha = ctx.check(alpha)
    beta = ctx.check(beta)
    _require(
        ctx.in_subfield(alpha, m),
        f"alpha = {ctx.elem_hex(alpha)} is not in GF(2^{m})",
    )
    _require(
        ctx.in_subfield(beta, 2 * m),
        f"beta = {ctx.elem_hex(beta)} is not in GF(2^{2 * m})",
    )
    qm1 = (1 << m) + 1
    _require(
        ctx.pow(beta, qm1) == ctx.mul(alpha, alpha) ^ 1,
        "beta^(2^m+1) = alpha^2 + 1 fails for "
        f"(alpha, beta) = ({ctx.elem_hex(alpha)}, {ctx.elem_hex(beta)})",
    )
    _require(
        not (alpha == 1 and beta == 0),
        "(alpha, beta) = (1, 0) is degenerate: all three maps collapse to x",
    )
    a2 = ctx.mul(alpha, alpha)
    a3 = ctx.mul(a2, alpha)
    bq1 = ctx.pow(beta, qm1)
    phi1 = [0] * ctx.n
    phi1[0] = alpha
    phi1[m] = beta
    phi2 = [0] * ctx.n
    phi2[0] = a2
    phi2[2 * m] = bq1
    phi3 = [0] * ctx.n
    phi3[0] = a3
    phi3[m] = ctx.mul(a2, beta)
    phi3[2 * m] = ctx.mul(alpha, bq1)
    phi3[3 * m] = ctx.mul(beta, bq1)  # beta^(2^m + 2)
    return PermutationTriple(
        ctx,
        LinearizedPoly(ctx, phi1),
        LinearizedPoly(ctx, phi2),
        LinearizedPoly(ctx, phi3),
        family="fam4",
        params={"alpha": alpha, "beta": beta},
    )


def family5(ctx: FieldCtx, m: int, c: int, d: int, lam: int) -> PermutationTriple:
    """Monomial pair plus an involution quadrinomial over GF(2^(4m)).

    (lam*x^(2^m), lam*x^(2^(3m)), c*x + d*x^(2^m) + (c+1)*x^(2^(2m)) + d*x^(2^(3m)))
    with c in GF(2^m), d in GF(2^(2m)) and lam^(2^m + 1) = 1.
    """
    m = _require_degree(ctx, m, 4)
    c = ctx.check(c)
    d = ctx.check(d)
    lam = ctx.check(lam)
    _require(ctx.in_subfield(c, m), f"c = {ctx.elem_hex(c)} is not in GF(2^{m})")
    _require(
        ctx.in_subfield(d, 2 * m), f"d = {ctx.elem_hex(d)} is not in GF(2^{2 * m})"
    )
    _require(
        ctx.pow(lam, (1 << m) + 1) == 1,
        f"lambda^(2^m+1) = 1 fails for lambda = {ctx.elem_hex(lam)}",
    )
    phi3 = [0] * ctx.n
    phi3[0] = c
    phi3[m] = d
    phi3[2 * m] = c ^ 1
    phi3[3 * m] = d
    return PermutationTriple(
        ctx,
        LinearizedPoly.monomial(ctx, lam, m),
        LinearizedPoly.monomial(ctx, lam, 3 * m),
        LinearizedPoly(ctx, phi3),
        family="fam5",
        params={"c": c, "d": d, "lambda": lam},
    )


_FAMILY_PARAM_NAMES = {
    "fam1": ("lambda",),
    "fam2": ("alpha",),
    "fam3i": ("alpha",),
    "fam3ii": ("alpha",),
    "fam4": ("alpha", "beta"),
    "fam5": ("c", "d", "lambda"),
}


def family_param_names(family: str) -> tuple[str, ...]:
    if family not in _FAMILY_PARAM_NAMES:
        raise ValueError(f"unknown family tag {family!r}")
    return _FAMILY_PARAM_NAMES[family]


def family_degree(family: str, m: int) -> int:
    """Extension degree of the field a family lives in."""
    if family in ("fam3i", "fam3ii"):
        return 6 * m
    if family in ("fam1", "fam2", "fam4", "fam5"):
        return 4 * m
    raise ValueError(f"unknown family tag {family!r}")


def build_family(ctx: FieldCtx, family: str, m: int, params) -> PermutationTriple:
    """Dispatch to a family constructor from a flat parameter tuple."""
    params = tuple(params)
    names = family_param_names(family)
    if len(params) != len(names):
        raise ConditionError(
            f"{family} takes parameters {names}, got {len(params)} value(s)"
        )
    if family == "fam1":
        return family1(ctx, m, params[0])
    if family == "fam2":
        return family2(ctx, m, params[0])
    if family == "fam3i":
        return family3(ctx, m, "i", params[0])
    if family == "fam3ii":
        return family3(ctx, m, "ii", params[0])
    if family == "fam4":
        return family4(ctx, m, params[0], params[1])
    return family5(ctx, m, params[0], params[1], params[2])


def enumerate_params(ctx: FieldCtx, family: str, m: int) -> list[tuple[int, ...]]:
    """Every parameter tuple satisfying a family's conditions, in order.

    An empty list is a legitimate outcome.  Enumeration scans the whole
    field, so it is limited to extension degree 16.
    """
    m = _require_degree(ctx, m, 6 if family.startswith("fam3") else 4)
    if ctx.n > ENUMERATION_MAX_DEGREE:
        raise ResourceLimitError(
            f"parameter enumeration is exhaustive; degree {ctx.n} exceeds "
            f"{ENUMERATION_MAX_DEGREE}"
        )
    qm = 1 << m
    out: list[tuple[int, ...]] = []
    if family == "fam1":
        out = [(l,) for l in ctx.elements() if ctx.pow(l, qm + 1) == 1]
    elif family == "fam2":
        out = [(a,) for a in ctx.elements() if ctx.in_subfield(a, m)]
    elif family == "fam3i":
        out = [
            (a,)
            for a in ctx.nonzero_elements()
            if ctx.in_subfield(a, 2 * m)
            and ctx.pow(a, qm) ^ ctx.pow(a, qm - 1) ^ 1 == 0
        ]
    elif family == "fam3ii":
        out = [(a,) for a in ctx.elements() if a != 1 and ctx.pow(a, qm + 1) == 1]
    elif family == "fam4":
        sub_m = [a for a in ctx.elements() if ctx.in_subfield(a, m)]
        sub_2m = [b for b in ctx.elements() if ctx.in_subfield(b, 2 * m)]
        out = [
            (a, b)
            for a in sub_m
            for b in sub_2m
            if ctx.pow(b, qm + 1) == ctx.mul(a, a) ^ 1 and (a, b) != (1, 0)
        ]
    elif family == "fam5":
        sub_m = [c for c in ctx.elements() if ctx.in_subfield(c, m)]
        sub_2m = [d for d in ctx.elements() if ctx.in_subfield(d, 2 * m)]
        lams = [l for l in ctx.elements() if ctx.pow(l, qm + 1) == 1]
        out = [(c, d, l) for c in sub_m for d in sub_2m for l in lams]
    else:
        raise ValueError(f"unknown family tag {family!r}")
    return out


# -- custom search ---------------------------------------------------------------

@dataclass(frozen=True)
class SearchHit:
    triple: PermutationTriple
    report: TripleReport
    agreement: AgreementReport


@dataclass(frozen=True)
class SearchResult:
    hits: tuple[SearchHit, ...]
    status: str  # "complete" or "budget exhausted"
    examined: int


def _parse_shape(shape, n: int) -> list[list[tuple[int, int]]]:
    """Per-slot lists of (coefficient, exponent-index) monomial choices."""
    if isinstance(shape, str):
        if shape == "monomials":
            choices = [(c, k) for k in range(n) for c in range(1, 1 << n)]
            return [choices, choices, choices]
        if shape.startswith("monomial-exponents:"):
            ks = tuple(int(p) for p in shape.split(":", 1)[1].split(","))
            shape = ("monomial-exponents", ks)
        else:
            raise ValueError(f"unknown search shape {shape!r}")
    kind, ks = shape
    if kind != "monomial-exponents" or len(ks) != 3:
        raise ValueError(f"unknown search shape {shape!r}")
    return [[(c, k % n) for c in range(1, 1 << n)] for k in ks]


def search_triples(
    n: int,
    shape,
    budget: int | None = None,
    seed: int = 0,
    ctx: FieldCtx | None = None,
) -> SearchResult:
    """Search a coefficient shape for triples with the sum-inverse property.

    Candidates are drawn exhaustively in lexicographic order when they
    all fit within the budget, and as a seeded random sample of distinct
    candidates otherwise.  Reorderings of one unordered triple are
    collapsed before verification (the property is symmetric in the
    three polynomials), and `examined` counts the candidates actually
    verified.  Every hit carries its agreement-set report.
    """
    if ctx is None:
        ctx = FieldCtx(n)
    elif ctx.n != n:
        raise ContextMismatchError(f"context degree {ctx.n} does not match n={n}")
    if n > SEARCH_MAX_DEGREE:
        raise ResourceLimitError(
            f"search is exhaustive over small fields; n={n} exceeds {SEARCH_MAX_DEGREE}"
        )
    slots = _parse_shape(shape, n)
    sizes = [len(s) for s in slots]
    total = sizes[0] * sizes[1] * sizes[2]

    def candidate(flat: int):
        i3 = flat % sizes[2]
        rest = flat // sizes[2]
        i2 = rest % sizes[1]
        i1 = rest // sizes[1]
        return (slots[0][i1], slots[1][i2], slots[2][i3])

    if budget is None or budget >= total:
        indices = range(total)
        status = "complete"
    elif budget <= 0:
        indices = range(0)
        status = "budget exhausted"
    else:
        indices = sorted(random.Random(seed).sample(range(total), budget))
        status = "budget exhausted"

    seen: set[tuple] = set()
    hits: list[SearchHit] = []
    examined = 0
    for flat in indices:
        monos = candidate(flat)
        polys = tuple(LinearizedPoly.monomial(ctx, c, k) for c, k in monos)
        key = tuple(sorted(p.coeffs for p in polys))
        if key in seen:
            continue
        seen.add(key)
        examined += 1
        if not all(p.is_permutation() for p in polys):
            continue
        triple = PermutationTriple(ctx, *polys)
        report = verify_triple(triple)
        if report.satisfied:
            hits.append(SearchHit(triple, report, agreement_report(triple)))
    return SearchResult(tuple(hits), status, examined)


# -- serialization ----------------------------------------------------------------

def triple_to_json(t: PermutationTriple) -> dict:
    return {
        "format": "triple",
        "field": t.ctx.spec,
        "family": t.family,
        "params": {k: t.ctx.elem_hex(v) for k, v in t.params.items()},
        "phi1": t.phi1.to_json(),
        "phi2": t.phi2.to_json(),
        "phi3": t.phi3.to_json(),
    }


def triple_from_json(obj: dict) -> PermutationTriple:
    if obj.get("format") != "triple":
        raise ValueError("not a triple document (missing format: triple)")
    ctx = parse_field_spec(obj["field"])
    return PermutationTriple(
        ctx,
        LinearizedPoly.from_json(ctx, obj["phi1"]),
        LinearizedPoly.from_json(ctx, obj["phi2"]),
        LinearizedPoly.from_json(ctx, obj["phi3"]),
        family=obj.get("family", "custom"),
        params={k: ctx.parse_element(v) for k, v in obj.get("params", {}).items()},
    )
