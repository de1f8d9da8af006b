"""Bent Boolean functions from triples of linearized permutations of GF(2^n).

The package constructs five parametric families of permutation triples,
verifies the sum-inverse property that makes a triple usable, measures
the pairwise agreement sets, synthesizes the corresponding Boolean
functions on GF(2^n) x GF(2^n), and certifies bentness through exact
Walsh-Hadamard spectra.  Every closed form has a brute-force counterpart
in the oracle module.
"""

__version__ = "0.1.0"

from .errors import (
    ContextMismatchError,
    ConditionError,
    NotInvertibleError,
    ResourceLimitError,
)
from .field import FieldCtx, FieldElement, default_modulus, is_irreducible, parse_field_spec
from .linearized import (
    LinearizedPoly,
    TrinomialInverseSolution,
    binomial_inverse,
    field_linsolve,
    gf2_matrix_inverse,
    gf2_rank,
    involution_quadrinomial,
    trinomial_inverse,
)
from .triples import (
    AgreementReport,
    PermutationTriple,
    SearchHit,
    SearchResult,
    TripleReport,
    agreement_report,
    build_family,
    enumerate_params,
    family1,
    family2,
    family3,
    family4,
    family5,
    family_degree,
    family_param_names,
    search_triples,
    triple_from_json,
    triple_to_json,
    verify_triple,
)
from .bent import (
    BooleanFunction,
    WalshSpectrum,
    function_from_json,
    function_to_json,
    fwht,
    is_bent,
    mm_synthesize,
    nonlinearity,
    synthesize,
    walsh_spectrum,
)
from . import oracle

__all__ = [
    "AgreementReport",
    "BooleanFunction",
    "ConditionError",
    "ContextMismatchError",
    "FieldCtx",
    "FieldElement",
    "LinearizedPoly",
    "NotInvertibleError",
    "PermutationTriple",
    "ResourceLimitError",
    "SearchHit",
    "SearchResult",
    "TrinomialInverseSolution",
    "TripleReport",
    "WalshSpectrum",
    "agreement_report",
    "binomial_inverse",
    "build_family",
    "default_modulus",
    "enumerate_params",
    "family1",
    "family2",
    "family3",
    "family4",
    "family5",
    "family_degree",
    "family_param_names",
    "field_linsolve",
    "function_from_json",
    "function_to_json",
    "fwht",
    "gf2_matrix_inverse",
    "gf2_rank",
    "involution_quadrinomial",
    "is_bent",
    "is_irreducible",
    "mm_synthesize",
    "nonlinearity",
    "oracle",
    "parse_field_spec",
    "search_triples",
    "synthesize",
    "trinomial_inverse",
    "triple_from_json",
    "triple_to_json",
    "verify_triple",
    "walsh_spectrum",
]
