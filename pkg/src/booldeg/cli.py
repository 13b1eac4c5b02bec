"""Command-line interface.

One executable with subcommands for measuring a function, verifying corpora
and families, building witness polynomials and decision trees, running the
symmetrizations, and producing Bezout certificates.  All structured output
is JSON with rationals rendered as "num/den" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import boolfn as bf
from . import degrees, dtree, harness, symmetry
from .boolfn import BooleanFunction, negate, parse_bf
from .polynomials import format_poly, format_univariate, parse_poly


def _load_function(args) -> BooleanFunction:
    if getattr(args, "file", None):
        with open(args.file, encoding="utf-8") as fh:
            return parse_bf(fh.read())
    if getattr(args, "family", None):
        obj = bf.family(args.family, n=args.n, m=args.m)
        if not isinstance(obj, BooleanFunction):
            raise SystemExit(f"family {args.family} is a partial function; "
                             "only total functions are supported here")
        return obj
    raise SystemExit("need --file or --family")


def _emit(payload) -> None:
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")


def cmd_measures(args) -> int:
    f = _load_function(args)
    fid = f"family:{args.family}" if args.family else f"file:{args.file}"
    report = harness.verify_function(f, fid)
    _emit(report.to_dict())
    return 0


def cmd_verify(args) -> int:
    if args.exhaustive:
        spec = harness.CorpusSpec(n=args.n, mode="exhaustive")
    else:
        spec = harness.CorpusSpec(
            n=args.n, mode="sampled", count=args.sample, seed=args.seed
        )
    summary = harness.verify_corpus(spec)
    _emit(summary)
    return 0 if summary["passed"] else 1


def cmd_verify_families(args) -> int:
    summary = harness.verify_families()
    _emit(summary)
    return 0 if summary["passed"] else 1


def cmd_tree(args) -> int:
    f = _load_function(args)
    tree, trace = dtree.build_tree(f)
    d = dtree.depth(tree)
    sw = degrees.sdeg(f)
    r, _ = degrees.rdeg(f)
    bound = 4 * sw.degree**2 * r**2
    print(dtree.format_tree(tree))
    print()
    print(dtree.format_trace(trace))
    print()
    print(f"depth = {d}; bound 4*sdeg^2*rdeg^2 = {bound}; "
          f"within bound: {d <= bound}")
    return 0


def cmd_witness(args) -> int:
    f = _load_function(args)
    if args.measure == "deg":
        _, poly = degrees.deg(f)
        print(format_poly(poly))
    elif args.measure == "ndeg":
        print(format_poly(degrees.ndeg(f).polynomial))
    elif args.measure == "sdeg":
        print(format_poly(degrees.sdeg(f).polynomial))
    else:  # rdeg
        _, rep = degrees.rdeg(f)
        print(f"numerator: {format_poly(rep.numerator)}")
        print(f"denominator: {format_poly(rep.denominator)}")
    return 0


def cmd_symmetrize(args) -> int:
    poly = parse_poly(args.poly)
    if args.kind == "bernoulli":
        print(format_univariate(symmetry.bernoulli_symmetrize(poly)))
    else:
        if args.block:
            block = [int(v) for v in args.block.split(",")]
        else:
            block = list(range(1, poly.arity + 1))
        out = symmetry.minsky_papert_symmetrize(poly, block)
        print(symmetry.format_symmetrized(out))
    return 0


def cmd_nullstellensatz(args) -> int:
    f = _load_function(args)
    g1 = degrees.ndeg(f).polynomial
    g2 = degrees.ndeg(negate(f)).polynomial
    cert = degrees.hypercube_nullstellensatz(g1, g2)
    _emit(
        {
            "spec_version": harness.SPEC_VERSION,
            "g1": format_poly(g1),
            "g2": format_poly(g2),
            "h1": format_poly(cert.h1),
            "h2": format_poly(cert.h2),
            "degrees": {
                "h1g1": cert.degree_h1g1,
                "h2g2": cert.degree_h2g2,
                "bound": 2 * g1.degree() ** 2 * g2.degree() ** 2,
            },
            "verified": cert.verified,
        }
    )
    return 0


def cmd_family(args) -> int:
    if args.list:
        _emit({"families": bf.FAMILY_SCHEMAS})
        return 0
    obj = bf.family(args.name, n=args.n, m=args.m)
    if isinstance(obj, BooleanFunction):
        sys.stdout.write(bf.format_bf(obj))
    else:
        sys.stdout.write(bf.format_pbf(obj))
    return 0


def _add_function_args(sub, family_optional=True) -> None:
    sub.add_argument("--file", help="truth-table .bf file")
    sub.add_argument("--family", help="family name (see 'family --list')")
    sub.add_argument("--n", type=int, help="family size parameter")
    sub.add_argument("--m", type=int, help="ANDOR side length")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="booldeg",
        description="Exact Boolean function complexity measures and inequality checks",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("measures", help="full measure report as JSON")
    _add_function_args(p)
    p.set_defaults(func=cmd_measures)

    p = subs.add_parser("verify", help="run every check over a corpus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--sample", type=int, help="number of sampled functions")
    p.add_argument("--seed", type=int, help="seed for sampled mode (required)")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("verify-families", help="check family point values")
    p.set_defaults(func=cmd_verify_families)

    p = subs.add_parser("tree", help="constructive decision tree with trace")
    _add_function_args(p)
    p.set_defaults(func=cmd_tree)

    p = subs.add_parser("witness", help="witness polynomial for a measure")
    p.add_argument("--measure", choices=["deg", "ndeg", "rdeg", "sdeg"], required=True)
    _add_function_args(p)
    p.set_defaults(func=cmd_witness)

    p = subs.add_parser("symmetrize", help="symmetrize a polynomial")
    p.add_argument("--kind", choices=["bernoulli", "minsky-papert"], required=True)
    p.add_argument("--poly", required=True, help="polynomial text, e.g. '2 - x1 - x2'")
    p.add_argument("--block", help="comma-separated variable indices")
    p.set_defaults(func=cmd_symmetrize)

    p = subs.add_parser("nullstellensatz", help="Bezout certificate from ndeg witnesses")
    _add_function_args(p)
    p.set_defaults(func=cmd_nullstellensatz)

    p = subs.add_parser("family", help="emit a family truth table")
    p.add_argument("--list", action="store_true")
    p.add_argument("--name")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_family)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "verify" and not args.exhaustive:
        if args.sample is None or args.seed is None:
            raise SystemExit("sampled mode requires --sample COUNT and --seed S")
    if args.command == "family" and not args.list and not args.name:
        raise SystemExit("need --name or --list")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
