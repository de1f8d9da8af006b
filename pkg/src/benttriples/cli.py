"""Command-line front end.

Subcommands: construct, verify, walsh, params, search.  All element
inputs and outputs are hex encodings of the integer element
representation, and every report echoes the field spec, so runs are
reproducible across machines.  Exit codes are a stable contract:
0 success, 1 usage or input problems, 2 violated mathematical
preconditions, 3 documented resource caps.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import __version__
from .errors import (
    ContextMismatchError,
    ConditionError,
    NotInvertibleError,
    ResourceLimitError,
)
from .field import FieldCtx, parse_field_spec
from .triples import (
    build_family,
    enumerate_params,
    family_degree,
    family_param_names,
    agreement_report,
    search_triples,
    triple_from_json,
    triple_to_json,
    verify_triple,
)
from .bent import (
    function_from_json,
    function_to_json,
    spectrum_csv_lines,
    synthesize,
    walsh_spectrum,
)
from .oracle import naive_walsh, pointwise_triple_check

_PARAM_DEST = {"lambda": "lam", "alpha": "alpha", "beta": "beta", "c": "c", "d": "d"}


def dumps_canonical(obj) -> str:
    """Deterministic JSON: sorted keys, no whitespace."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1, leaving 2 for violated mathematical conditions
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _read_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _family_ctx(args) -> FieldCtx:
    degree = family_degree(args.family, args.m)
    if args.field:
        ctx = parse_field_spec(args.field)
        if ctx.n != degree:
            raise ConditionError(
                f"{args.family} with m={args.m} needs field degree {degree}, "
                f"got {ctx.n}"
            )
        return ctx
    return FieldCtx(degree)


def _report(command: str, field_spec: str, inputs, results, timings) -> dict:
    return {
        "command": command,
        "version": __version__,
        "field": field_spec,
        "inputs": inputs,
        "results": results,
        "timings_ms": timings,
    }


def cmd_construct(args) -> int:
    ctx = _family_ctx(args)
    values = []
    for name in family_param_names(args.family):
        raw = getattr(args, _PARAM_DEST[name])
        if raw is None:
            raise ConditionError(f"{args.family} requires --{name} <hex>")
        values.append(ctx.parse_element(raw))
    triple = build_family(ctx, args.family, args.m, values)
    print(dumps_canonical(triple_to_json(triple)))
    return 0


def cmd_params(args) -> int:
    ctx = _family_ctx(args)
    tuples = enumerate_params(ctx, args.family, args.m)
    if len(family_param_names(args.family)) == 1:
        out = [ctx.elem_hex(t[0]) for t in tuples]
    else:
        out = [[ctx.elem_hex(v) for v in t] for t in tuples]
    print(dumps_canonical(out))
    return 0


def cmd_verify(args) -> int:
    triple_obj = _read_json(args.triple)
    triple = triple_from_json(triple_obj)
    timings = {}
    t0 = time.perf_counter()
    check = verify_triple(triple)
    agreement = agreement_report(triple)
    timings["verify"] = (time.perf_counter() - t0) * 1000.0
    results = {"triple_check": check.to_dict(), "agreement": agreement.to_dict()}
    spectrum = None
    if args.bent:
        t0 = time.perf_counter()
        spectrum = walsh_spectrum(synthesize(triple))
        timings["bent"] = (time.perf_counter() - t0) * 1000.0
        results["bent"] = spectrum.summary()
    if args.oracle:
        t0 = time.perf_counter()
        oracle_check = pointwise_triple_check(triple)
        diff = {"triple_check_match": oracle_check == check}
        if spectrum is not None:
            reference = naive_walsh(synthesize(triple))
            diff["spectrum_match"] = bool(
                np.array_equal(reference.values, spectrum.values)
            )
        timings["oracle"] = (time.perf_counter() - t0) * 1000.0
        results["oracle"] = diff
    if args.json:
        report = _report(
            "verify", triple.ctx.spec, triple_to_json(triple), results, timings
        )
        print(dumps_canonical(report))
    else:
        print(f"field: {triple.ctx.spec}  family: {triple.family}")
        print(
            f"triple check: satisfied={check.satisfied} "
            f"(members {check.each_permutation}, sum {check.sum_is_permutation}, "
            f"inverse-sum identity {check.inverse_sum_identity})"
        )
        print(
            f"agreement sets: |E12|={agreement.size_12} |E13|={agreement.size_13} "
            f"|E23|={agreement.size_23} |union|={agreement.size_union} "
            f"covers_field={agreement.covers_field}"
        )
        if "bent" in results:
            print(f"bent: {results['bent']}")
        if "oracle" in results:
            print(f"oracle diff: {results['oracle']}")
    return 0


def cmd_walsh(args) -> int:
    obj = _read_json(args.input)
    origin = None
    if obj.get("format") == "triple":
        triple = triple_from_json(obj)
        func = synthesize(triple)
        origin = triple_to_json(triple)
    else:
        func = function_from_json(obj)
        origin = obj.get("origin")
    timings = {}
    t0 = time.perf_counter()
    spectrum = walsh_spectrum(func)
    timings["walsh"] = (time.perf_counter() - t0) * 1000.0
    if args.full:
        for line in spectrum_csv_lines(spectrum):
            print(line)
        return 0
    summary = spectrum.summary()
    if args.oracle:
        t0 = time.perf_counter()
        reference = naive_walsh(func)
        summary["oracle_match"] = bool(
            np.array_equal(reference.values, spectrum.values)
        )
        timings["oracle"] = (time.perf_counter() - t0) * 1000.0
    if args.json:
        inputs = function_to_json(func, origin)
        print(dumps_canonical(_report("walsh", func.ctx.spec, inputs, summary, timings)))
    else:
        print(dumps_canonical(summary))
    return 0


def cmd_search(args) -> int:
    result = search_triples(args.n, args.shape, args.budget, args.seed)
    out = {
        "status": result.status,
        "examined": result.examined,
        "hits": [
            {
                "triple": triple_to_json(hit.triple),
                "triple_check": hit.report.to_dict(),
                "agreement": hit.agreement.to_dict(),
            }
            for hit in result.hits
        ],
    }
    print(dumps_canonical(out))
    return 0


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--field", help="field spec gf2:<n>[:<modulus-hex>]")
    common.add_argument("--json", action="store_true", help="emit a full JSON run report")
    common.add_argument(
        "--oracle", action="store_true", help="re-check with the brute-force path"
    )
    common.add_argument("--seed", type=int, default=0, help="seed for randomized search")

    parser = _Parser(prog="benttriples", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", parents=[common], help="build a family triple")
    p.add_argument(
        "--family",
        required=True,
        choices=("fam1", "fam2", "fam3i", "fam3ii", "fam4", "fam5"),
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--lambda", dest="lam", metavar="HEX")
    p.add_argument("--alpha", metavar="HEX")
    p.add_argument("--beta", metavar="HEX")
    p.add_argument("--c", metavar="HEX")
    p.add_argument("--d", metavar="HEX")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check a triple file")
    p.add_argument("--triple", default="-", help="triple JSON path, '-' for stdin")
    p.add_argument("--bent", action="store_true", help="also synthesize and certify")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("walsh", parents=[common], help="spectrum of a function or triple")
    p.add_argument("--input", default="-", help="function/triple JSON path, '-' for stdin")
    p.add_argument("--full", action="store_true", help="emit the full CSV spectrum")
    p.set_defaults(func=cmd_walsh)

    p = sub.add_parser("params", parents=[common], help="enumerate valid parameters")
    p.add_argument(
        "--family",
        required=True,
        choices=("fam1", "fam2", "fam3i", "fam3ii", "fam4", "fam5"),
    )
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("search", parents=[common], help="search custom triples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--shape", default="monomials")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1
    except (ConditionError, NotInvertibleError) as e:
        print(f"condition violated: {e}", file=sys.stderr)
        return 2
    except ResourceLimitError as e:
        print(f"resource limit: {e}", file=sys.stderr)
        return 3
    except (ContextMismatchError, OSError, json.JSONDecodeError, KeyError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
