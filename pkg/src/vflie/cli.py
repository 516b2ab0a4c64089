"""Command-line interface.

Subcommands: phi, shift, span, hilbert, homology, weights, specht.  Output
is deterministic (sorted JSON keys, fixed indentation, trailing newline) so
runs are byte-for-byte reproducible.  Exit codes: 0 success, 1 a computed
certificate came back false, 2 a search or resource limit was hit or a fit
was inconclusive, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .exact import MPoly, format_rat, parse_rat
from .liealg import AlgebraDescriptor
from .pbw_hilbert import (
    associated_graded_presentation,
    groebner_self_test,
    hilbert_series,
    module_groebner,
    partial_sum_polynomial,
)
from .spanning import (
    DEFAULT_BOUND,
    DEFAULT_CUTOFF,
    ResourceLimitError,
    SearchExhaustedError,
    dilated_generators,
    find_good_shift,
    graded_basis_certificate,
    shift_determinant,
    spanning_certificate,
    spanning_generators,
)
from .specht import closure_basis, tspace_series, variables_tuple
from .tensormod import ModuleDescriptor, decompose_coinduced, graded_dimension, weight_support
from . import homology as hm

__all__ = ["main"]

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_LIMIT = 2
EXIT_USAGE = 64


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage failures exit with code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write("%s: error: %s\n" % (self.prog, message))
        raise SystemExit(EXIT_USAGE)


def _rat_vector(text: str, r: int = None):
    parts = [p.strip() for p in text.split(",")] if text else []
    vec = tuple(parse_rat(p) for p in parts)
    if r is not None and len(vec) != r:
        raise ValueError("expected %d comma-separated rationals, got %d" % (r, len(vec)))
    return vec


def _int_vector(text: str):
    return tuple(int(p.strip()) for p in text.split(",")) if text else ()


def _parse_algebra(text: str) -> AlgebraDescriptor:
    """\"W:n\", \"L{d}:n\", or \"Lsum:n\"."""
    head, sep, tail = text.partition(":")
    if not sep:
        raise ValueError("algebra must look like W:n, L<d>:n, or Lsum:n")
    n = int(tail)
    if head == "W":
        return AlgebraDescriptor(n, d=0, flavor="W")
    if head == "Lsum":
        return AlgebraDescriptor(n, d=1, flavor="Lsum")
    if head.startswith("L") and head[1:].isdigit():
        return AlgebraDescriptor(n, d=int(head[1:]), flavor="L")
    raise ValueError("unknown algebra %r" % text)


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _poly_coeffs(poly: MPoly):
    """Ascending univariate coefficients as p/q strings."""
    deg = poly.total_degree()
    out = []
    for k in range(deg + 1):
        out.append(format_rat(poly.coefficient((k,))))
    return out


# -- subcommands


def _cmd_phi(args):
    lam = _rat_vector(args.lam, args.r)
    mu = _rat_vector(args.mu, args.r)
    poly = shift_determinant(args.r, lam, mu, max_r=args.max_r)
    payload = {
        "r": args.r,
        "lambda": [format_rat(x) for x in lam],
        "mu": [format_rat(x) for x in mu],
        "poly": str(poly),
        "coeffs": _poly_coeffs(poly),
    }
    if args.format == "text":
        _emit(args, payload["poly"] + "\n")
    else:
        _emit(args, _json(payload))
    return EXIT_OK


def _cmd_shift(args):
    lam = _rat_vector(args.lam, args.r)
    mu = _rat_vector(args.mu, args.r)
    N = find_good_shift(args.r, lam, mu, bound=args.bound, cutoff=args.cutoff)
    cert = graded_basis_certificate(args.r, lam, mu, N, args.cutoff)
    if args.format == "text":
        _emit(
            args,
            "N = %s  verdict = %s\n" % (",".join(map(str, N)), cert["verdict"]),
        )
    else:
        _emit(args, _json(cert))
    return EXIT_OK if cert["verdict"] else EXIT_FALSE


def _cmd_span(args):
    lam = _rat_vector(args.lam, args.r)
    mu = _rat_vector(args.mu, args.r)
    if args.d == 1:
        S = spanning_generators(args.r, lam, mu, cutoff=args.gen_cutoff, bound=args.bound)
    else:
        S = dilated_generators(args.r, lam, mu, args.d, cutoff=args.gen_cutoff, bound=args.bound)
    cert = spanning_certificate(S, args.r, lam, mu, args.cutoff, d=args.d)
    if args.format == "text":
        lines = ["generators (%d):" % len(cert["generators"])]
        lines += ["  " + ",".join(map(str, g)) for g in cert["generators"]]
        lines.append("verdict = %s" % cert["verdict"])
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _json(cert))
    return EXIT_OK if cert["verdict"] else EXIT_FALSE


def _cmd_hilbert(args):
    lam = _rat_vector(args.lam, args.r)
    mu = _rat_vector(args.mu, args.r)
    desc = ModuleDescriptor(args.r, lam, mu)
    S = spanning_generators(
        args.r, lam, mu, cutoff=max(args.r, DEFAULT_CUTOFF), bound=args.bound
    )
    pres = associated_graded_presentation(desc, list(S), args.cutoff)
    gb = module_groebner(pres)
    if not groebner_self_test(gb):
        raise ResourceLimitError("module basis failed its confluence self-test")
    series = hilbert_series(gb)
    dims = [int(c) for c in series.expand(args.cutoff)]
    expected = [graded_dimension(desc, w) for w in range(args.cutoff + 1)]
    by_weight = {}
    for rel in gb.relations:
        lead = None
        for pos, poly in enumerate(rel):
            if not poly.is_zero():
                for expo in poly.terms:
                    wd = sum((i + 1) * e for i, e in enumerate(expo))
                    wt = wd + gb.generator_weights[pos]
                    lead = wt if lead is None else min(lead, wt)
        by_weight[lead] = by_weight.get(lead, 0) + 1
    payload = {
        "r": args.r,
        "lambda": [format_rat(x) for x in lam],
        "mu": [format_rat(x) for x in mu],
        "generators": [list(g) for g in S],
        "series": series.to_dict(),
        "dims": dims,
        "dims_match": dims == expected,
        "relations_by_weight": {str(k): v for k, v in sorted(by_weight.items())},
        "cutoff": args.cutoff,
    }
    inconclusive = False
    try:
        coeffs, d, c = partial_sum_polynomial(series, args.cutoff)
        payload["partial_sum"] = {
            "degree": d,
            "coeffs": [format_rat(x) for x in coeffs],
            "normalized_leading": c,
        }
    except ValueError as exc:
        payload["partial_sum"] = {"error": str(exc)}
        inconclusive = True
    if args.format == "csv":
        lines = ["w,dim"] + ["%d,%d" % (w, dims[w]) for w in range(len(dims))]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "text":
        _emit(args, "num=%s den=%s dims=%s\n" % (
            series.to_dict()["num"], series.to_dict()["den"], dims))
    else:
        _emit(args, _json(payload))
    if not payload["dims_match"]:
        return EXIT_FALSE
    return EXIT_LIMIT if inconclusive else EXIT_OK


def _cmd_homology(args):
    alg = _parse_algebra(args.algebra)
    if args.lam or args.mu:
        lam = _rat_vector(args.lam)
        mu = _rat_vector(args.mu)
        if len(lam) != len(mu):
            raise ValueError("lambda and mu must have the same length")
        coeffs = hm.TensorCoefficients(ModuleDescriptor(len(lam), lam, mu))
    else:
        coeffs = hm.TrivialCoefficients()
    table = hm.homology_table(
        alg, coeffs, args.p_max, args.w_max, dim_limit=args.dim_limit, jobs=args.jobs
    )
    if args.format == "csv":
        _emit(args, hm.table_to_csv(table, args.p_max, args.w_max))
    elif args.format == "text":
        _emit(args, hm.table_to_csv(table, args.p_max, args.w_max))
    else:
        _emit(args, hm.table_to_json(alg, table, args.p_max, args.w_max))
    return EXIT_OK


def _cmd_weights(args):
    lam = _int_vector(args.lam)
    n = len(lam)
    support = weight_support(lam, n)
    modules = decompose_coinduced(lam, n)
    payload = {
        "lambda": list(lam),
        "n": n,
        "weights": [
            {"alpha": list(wv.alpha), "mult": wv.multiplicity} for wv in support
        ],
        "total_dim": sum(wv.multiplicity for wv in support),
        "modules": [
            {
                "lambda": [format_rat(x) for x in d.lam],
                "mu": [format_rat(x) for x in d.mu],
                "mult": m,
            }
            for d, m in modules
        ],
    }
    if args.format == "csv":
        lines = ["alpha,mult"] + [
            "%s,%d" % (" ".join(map(str, wv.alpha)), wv.multiplicity) for wv in support
        ]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "text":
        lines = ["%s  x%d" % (wv.alpha, wv.multiplicity) for wv in support]
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _json(payload))
    return EXIT_OK


def _load_generators(path: str):
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list) or not data:
        raise ValueError("generator file must be a non-empty JSON list")
    polys = []
    n = None
    for entry in data:
        if not isinstance(entry, dict) or not entry:
            raise ValueError("each generator must be a non-empty JSON object")
        terms = {}
        for key, val in entry.items():
            expo = tuple(int(p.strip()) for p in key.split(","))
            if n is None:
                n = len(expo)
            elif len(expo) != n:
                raise ValueError("inconsistent exponent lengths in generator file")
            terms[expo] = parse_rat(str(val))
        polys.append((terms))
    variables = variables_tuple(n)
    return [MPoly(variables, t) for t in polys], n


def _cmd_specht(args):
    gens, n = _load_generators(args.generators)
    ts = closure_basis(gens, args.cutoff)
    fit = tspace_series(ts)
    payload = {
        "n": n,
        "cutoff": args.cutoff,
        "dims": fit["dims"],
        "inconclusive": fit["inconclusive"],
    }
    if not fit["inconclusive"]:
        payload["series"] = {"num": fit["num"], "den": fit["den"]}
    if args.format == "csv":
        lines = ["w,dim"] + ["%d,%d" % (w, d) for w, d in enumerate(fit["dims"])]
        _emit(args, "\n".join(lines) + "\n")
    elif args.format == "text":
        _emit(args, "dims=%s inconclusive=%s\n" % (fit["dims"], fit["inconclusive"]))
    else:
        _emit(args, _json(payload))
    return EXIT_LIMIT if fit["inconclusive"] else EXIT_OK


def _add_common(p):
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--output", help="write to this path instead of stdout")


def _add_module_params(p):
    p.add_argument("--r", type=int, required=True, help="number of tensor factors")
    p.add_argument("--lam", default="", help="comma-separated rationals, length r")
    p.add_argument("--mu", default="", help="comma-separated rationals, length r")


def build_parser() -> _Parser:
    parser = _Parser(prog="vflie", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", parents=[], help="shift determinant polynomial in N")
    _add_module_params(p)
    p.add_argument("--max-r", type=int, default=5)
    _add_common(p)
    p.set_defaults(func=_cmd_phi)

    p = sub.add_parser("shift", help="find a certified graded-basis shift")
    _add_module_params(p)
    p.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_common(p)
    p.set_defaults(func=_cmd_shift)

    p = sub.add_parser("span", help="spanning generators with certificate")
    _add_module_params(p)
    p.add_argument("--d", type=int, default=1, help="restrict to e_d, e_2d, ...")
    p.add_argument("--cutoff", type=int, default=10, help="verification cutoff")
    p.add_argument("--gen-cutoff", type=int, default=DEFAULT_CUTOFF)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_common(p)
    p.set_defaults(func=_cmd_span)

    p = sub.add_parser("hilbert", help="graded module presentation and Hilbert series")
    _add_module_params(p)
    p.add_argument("--cutoff", type=int, default=10, help="relation harvest cutoff")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_common(p)
    p.set_defaults(func=_cmd_hilbert)

    p = sub.add_parser("homology", help="Chevalley-Eilenberg homology table")
    p.add_argument("--algebra", required=True, help="W:n, L<d>:n, or Lsum:n")
    p.add_argument("--lam", default="", help="tensor coefficients: lambda vector")
    p.add_argument("--mu", default="", help="tensor coefficients: mu vector")
    p.add_argument("--p-max", type=int, default=2)
    p.add_argument("--w-max", type=int, default=8)
    p.add_argument("--dim-limit", type=int, default=hm.DEFAULT_DIM_LIMIT)
    p.add_argument("--jobs", type=int, default=1)
    _add_common(p)
    p.set_defaults(func=_cmd_homology)

    p = sub.add_parser("weights", help="weight support of the gl_n module V_lambda")
    p.add_argument("--lam", required=True, help="comma-separated integers, dominant")
    _add_common(p)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("specht", help="substitution-closure dimensions and series")
    p.add_argument("--generators", required=True, help="JSON file of generators")
    p.add_argument("--cutoff", type=int, default=10)
    _add_common(p)
    p.set_defaults(func=_cmd_specht)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (SearchExhaustedError, ResourceLimitError) as exc:
        sys.stderr.write("limit: %s\n" % exc)
        return EXIT_LIMIT
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
