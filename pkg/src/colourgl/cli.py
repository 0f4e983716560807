"""Command-line front end.

Exit status: 0 when every requested report passes, 1 when any report has
violations, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import product
from typing import Sequence

from .casimir import VARIANTS, casimir_summary
from .colour import bracket_flip_table, colour_sign, colour_structure, verify_colour_relations
from .exact import format_scalar
from .grading import GradedSignature, all_signatures, region_grid
from .klein import WeightDiagonalRep, verify_b_commutation
from .representations import build_rep
from .superalg import super_sign, super_structure, verify_super_relations

SCOPES = ("super", "klein", "colour", "all")
DEFAULT_SWEEP_REPS = ("defining", "tensor:2")


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def corrupt(rep: WeightDiagonalRep) -> WeightDiagonalRep:
    """Negative-control hook: flip the sign of ρ(E_1r) and shift w_1 of basis vector 1."""
    if rep.r < 2:
        raise UsageError("corruption needs r >= 2; rank-1 algebras are abelian")
    bad = rep.with_generator(1, rep.r, -rep.generator(1, rep.r), label=f"{rep.label}+corrupt")
    weights = [list(w) for w in rep.weights]
    weights[0][0] += 1
    return bad.with_weights(weights)


def run_verify(sig: GradedSignature, rep_spec: str, scope: str, inject: bool = False) -> list:
    rep = build_rep(sig, rep_spec)
    if inject:
        rep = corrupt(rep)
    reports = []
    if scope in ("super", "all"):
        reports.append(verify_super_relations(rep, label=str(sig)))
    if scope in ("klein", "all"):
        reports.append(verify_b_commutation(rep, label=str(sig)))
    if scope in ("colour", "all"):
        reports.append(verify_colour_relations(rep, sig))
    return reports


def _signatures(args) -> list[GradedSignature]:
    if args.all_sigs:
        return list(all_signatures(args.max_rank))
    if args.sig is None:
        raise UsageError("give --sig or --all-sigs")
    try:
        return [GradedSignature.parse(args.sig)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_verify(args, out) -> int:
    reps = [args.rep] if args.rep else (list(DEFAULT_SWEEP_REPS) if args.all_sigs else ["defining"])
    reports = []
    for sig in _signatures(args):
        for rep_spec in reps:
            try:
                reports.extend(run_verify(sig, rep_spec, args.scope, args.inject_corruption))
            except ValueError as exc:
                raise UsageError(str(exc)) from None
    ok = all(r.passed for r in reports)
    print(json.dumps({"pass": ok, "reports": [r.to_json() for r in reports]}, indent=2), file=out)
    return 0 if ok else 1


def structure_records(sig: GradedSignature, which: str):
    idx = sig.indices()
    if which == "flips":
        for (i, j), (k, l) in bracket_flip_table(sig):
            yield {
                "sig": str(sig),
                "flip": [[i, j], [k, l]],
                "super_exponent": super_sign(sig, i, j, k, l),
                "colour_exponent": colour_sign(sig, i, j, k, l),
            }
        return
    structure, sign = (super_structure, super_sign) if which == "super" else (colour_structure, colour_sign)
    for i, j, k, l in product(idx, repeat=4):
        result = structure(sig, i, j, k, l)
        if result:
            yield {
                "sig": str(sig),
                "bracket": [[i, j], [k, l]],
                "sign_exponent": sign(sig, i, j, k, l),
                "result": [[format_scalar(c), [p, q]] for (p, q), c in sorted(result.items())],
            }


def cmd_structure(args, out) -> int:
    for sig in _signatures(args):
        for record in structure_records(sig, args.which):
            print(_dump(record), file=out)
    return 0


def format_region_table(sig: GradedSignature) -> str:
    grid = region_grid(sig)
    width = len(str(sig.r))
    header = " " * (width + 1) + " ".join(str(j).rjust(width) for j in sig.indices())
    lines = [f"regions for {sig}", header]
    for i, row in zip(sig.indices(), grid):
        lines.append(str(i).rjust(width) + " " + " ".join(x.rjust(width) for x in row))
    return "\n".join(lines)


def cmd_regions(args, out) -> int:
    for sig in _signatures(args):
        if args.format == "json":
            print(_dump({"sig": str(sig), "regions": region_grid(sig)}), file=out)
        else:
            print(format_region_table(sig), file=out)
    return 0


def cmd_casimir(args, out) -> int:
    results = []
    for sig in _signatures(args):
        try:
            rep = build_rep(sig, args.rep or "defining")
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        results.append(casimir_summary(rep, sig, args.variant))
    payload = [s.to_json() for s in results]
    if args.all_sigs:
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(_dump(payload[0]), file=out)
    return 0 if all(s.central for s in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colourgl",
        description="Exact checks of the Klein-operator realisation of gl(m1,m2|n1,n2).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats=("json",)) -> None:
        p.add_argument("--sig", help="signature 'm1,m2|n1,n2'")
        p.add_argument("--all-sigs", action="store_true", help="every signature with m+n <= --max-rank")
        p.add_argument("--max-rank", type=int, default=5, metavar="N")
        p.add_argument("--format", choices=formats, default=formats[0])

    p = sub.add_parser("verify", help="run relation sweeps")
    common(p)
    p.add_argument("--rep", help="'defining' or 'tensor:k' (k <= 3)")
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--inject-corruption", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("structure", help="dump structure constants or the bracket flip table as JSON lines")
    common(p)
    p.add_argument("--which", choices=("super", "colour", "flips"), default="colour")
    p.set_defaults(func=cmd_structure)

    p = sub.add_parser("regions", help="print the region label of every index pair")
    common(p, formats=("table", "json"))
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("casimir", help="Casimir centrality and eigenvalue report")
    common(p)
    p.add_argument("--rep", help="'defining' or 'tensor:k' (k <= 3)")
    p.add_argument("--variant", choices=VARIANTS, default="column-degree")
    p.set_defaults(func=cmd_casimir)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.max_rank < 1:
        parser.print_usage(sys.stderr)
        print("colourgl: error: --max-rank must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"colourgl: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
