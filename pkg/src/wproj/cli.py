"""Command-line front end.

Reports are JSON objects with a fixed key order, so identical invocations
produce byte-identical output.  Arithmetic values (weights, multipliers,
structure constants, group orders, rationals) are serialized as decimal
strings to protect consumers from 64-bit overflow; structural values
(indices, degrees-as-keys, dimensions, counts) stay JSON numbers.  The full
schema is documented in the README.

Exit codes: 0 success, 2 invalid input, 3 resource limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import classify, cohom, strata, weights
from .errors import InvalidInputError, ResourceLimitError
from .numth import as_prime_set, unit_split

SCHEMA_VERSION = 1


def _wstr(values) -> list[str]:
    return [str(x) for x in values]


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidInputError(f"cannot parse rational from {text!r}") from None


def _parse_ints(text: str, what: str) -> list[int]:
    parts = [s.strip() for s in text.split(",")]
    if parts == [""]:
        raise InvalidInputError(f"empty {what}")
    try:
        return [int(s) for s in parts]
    except ValueError:
        raise InvalidInputError(f"cannot parse {what} from {text!r}") from None


def _report(command: str, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, **payload}


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _move_json(move) -> dict:
    if move[0] == "scale":
        return {"op": "scale", "divisor": str(move[1])}
    return {"op": "reduce", "prime": str(move[1]), "fixed_index": move[2]}


def _cmd_normalize(args) -> int:
    w = weights.parse_weights(args.weights)
    normalized, moves = weights.normalize_with_moves(w)
    _emit(
        _report(
            "normalize",
            {
                "input": _wstr(w),
                "normalized": _wstr(normalized),
                "moves": [_move_json(m) for m in moves],
            },
        )
    )
    return 0


def _cmd_invariants(args) -> int:
    w = weights.parse_weights(args.weights)
    nw = weights.normalize(w)
    table = weights.p_content_table(nw)
    presentation = cohom.ring(nw)
    constants = [
        {"i": i, "j": j, "value": str(presentation.constants[i, j])}
        for (i, j) in sorted(presentation.constants)
    ]
    _emit(
        _report(
            "invariants",
            {
                "input": _wstr(w),
                "normalized": _wstr(nw),
                "p_content": {
                    str(p): {"parts": _wstr(col.parts), "sorted": _wstr(col.sorted_parts)}
                    for p, col in table.items()
                },
                "divisor_chain_form": _wstr(weights.divisor_chain_form(nw)),
                "pullback_coefficients": _wstr(presentation.pullback),
                "structure_constants": constants,
                "additive_cohomology": {str(d): str(o) for d, o in cohom.additive_cohomology(nw).items()},
                "homeo_canonical_form": _wstr(classify.homeo_canonical_form(w)),
                "homotopy_canonical_form": _wstr(classify.homotopy_canonical_form(w)),
            },
        )
    )
    return 0


def _cmd_compare(args) -> int:
    left = weights.parse_weights(args.left)
    right = weights.parse_weights(args.right)
    _emit(
        _report(
            "compare",
            {
                "left": _wstr(left),
                "right": _wstr(right),
                "homeomorphic": classify.homeomorphic(left, right),
                "homotopy_equivalent": classify.homotopy_equivalent(left, right),
            },
        )
    )
    return 0


def _cmd_lens(args) -> int:
    w = weights.parse_weights(args.weights)
    if args.k < 1:
        raise InvalidInputError(f"group order k must be positive, got {args.k}")
    groups = cohom.lens_cohomology(args.k, w)
    _emit(
        _report(
            "lens",
            {
                "k": str(args.k),
                "weights": _wstr(w),
                "groups": {str(d): str(o) for d, o in sorted(groups.items())},
            },
        )
    )
    return 0


def _cmd_stratum(args) -> int:
    w = weights.parse_weights(args.weights)
    support = _parse_ints(args.support, "support set")
    chart = strata.stratum_chart(w, support)
    normalized = weights.is_normalized(w)
    order = str(strata.local_homology_order(w, support)) if normalized else None
    _emit(
        _report(
            "stratum",
            {
                "weights": _wstr(w),
                "support": list(chart.support),
                "zero_set": list(chart.zero_set),
                "torus_rank": chart.torus_rank,
                "cyclic_order": str(chart.cyclic_order),
                "cone_weights": _wstr(chart.cone_weights),
                "normalized": normalized,
                "local_homology_order": order,
            },
        )
    )
    return 0


def _cmd_cells(args) -> int:
    w = weights.parse_weights(args.weights)
    decomposition = strata.cell_decomposition(w)
    _emit(
        _report(
            "cells",
            {
                "weights": _wstr(decomposition.weights),
                "cells": list(decomposition.cells),
                "filtration": [
                    {"subspace": _wstr(step.subspace), "rescaled": _wstr(step.rescaled)}
                    for step in decomposition.filtration
                ],
            },
        )
    )
    return 0


def _census_table(report: classify.CensusReport) -> str:
    rows = [("representative", "homeo class", "homotopy class", "size")]
    for record in report.records:
        rows.append(
            (
                ",".join(map(str, record.representative)),
                ",".join(map(str, record.homeo_class)),
                ",".join(map(str, record.homotopy_class)),
                str(len(record.members)),
            )
        )
    widths = [max(len(row[c]) for row in rows) for c in range(4)]
    lines = ["  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip() for row in rows]
    summary = (
        f"total {report.total}  homeo classes {report.homeo_classes}  "
        f"homotopy classes {report.homotopy_classes}"
    )
    return "\n".join(lines + [summary])


def _cmd_census(args) -> int:
    limit = args.limit
    if limit is None:
        env = os.environ.get("WPROJ_CENSUS_LIMIT")
        limit = int(env) if env else None
    report = classify.census(args.dim, args.max_weight, limit=limit, workers=args.workers)
    if args.table:
        sys.stdout.write(_census_table(report) + "\n")
        return 0
    classes = []
    for record in report.records:
        entry = {
            "representative": _wstr(record.representative),
            "homeo_class": _wstr(record.homeo_class),
            "homotopy_class": _wstr(record.homotopy_class),
            "size": len(record.members),
        }
        if not args.no_members:
            entry["members"] = [_wstr(m) for m in record.members]
        classes.append(entry)
    _emit(
        _report(
            "census",
            {
                "dimension": report.dimension,
                "max_weight": report.max_weight,
                "total": report.total,
                "homeo_classes": report.homeo_classes,
                "homotopy_classes": report.homotopy_classes,
                "classes": classes,
            },
        )
    )
    return 0


def _cmd_split(args) -> int:
    x = _parse_rational(args.rational)
    primes = as_prime_set(_parse_ints(args.primes, "prime set"))
    u, v = unit_split(x, primes)
    _emit(
        _report(
            "split",
            {
                "input": _frac(x),
                "primes": _wstr(sorted(primes)),
                "unit": _frac(u),
                "supported": _frac(v),
            },
        )
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wproj",
        description="Exact invariants and classification of weighted projective spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="normalized weights and the rewriting moves")
    p.add_argument("weights", help='comma-separated weights, e.g. "6,10,15"')
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("invariants", help="full invariant report for one space")
    p.add_argument("weights")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("compare", help="homeomorphism and homotopy equivalence verdicts")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("lens", help="cohomology of the generalized lens space L(k; weights)")
    p.add_argument("k", type=int)
    p.add_argument("weights")
    p.set_defaults(func=_cmd_lens)

    p = sub.add_parser("stratum", help="local chart and local-homology order at a stratum")
    p.add_argument("weights")
    p.add_argument("--support", required=True, help="0-based indices of nonzero coordinates, e.g. 1,3")
    p.set_defaults(func=_cmd_stratum)

    p = sub.add_parser("cells", help="cell decomposition of a divisor-chain space")
    p.add_argument("weights")
    p.set_defaults(func=_cmd_cells)

    p = sub.add_parser("census", help="classify all weight multisets in a box")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-weight", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="enumeration budget (default WPROJ_CENSUS_LIMIT or 10^7)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--table", action="store_true", help="tabular summary instead of JSON")
    p.add_argument("--no-members", action="store_true", help="omit member lists from the JSON report")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("split", help="split a rational into a P-coprime unit and a P-supported part")
    # let negative rationals like -4/9 through positional parsing
    p._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")
    p.add_argument("rational", help='e.g. "-4/9"')
    p.add_argument("--primes", required=True, help="comma-separated primes, e.g. 2,3")
    p.set_defaults(func=_cmd_split)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"wproj: resource limit: {exc}", file=sys.stderr)
        return 3
    except InvalidInputError as exc:
        print(f"wproj: invalid input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
