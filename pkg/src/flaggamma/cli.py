"""Command-line front end.

Complex arguments are either a facet file or an inline generator:

  polygon:N            cycle on 1..N (0..63 for N = 64)
  cross:D              boundary of the D-dimensional cross-polytope
  simplex:N            full simplex on 1..N
  boundary:N           boundary of the simplex on 1..N
  sd:<complex>         barycentric subdivision
  join:<a>,<b>         join (the second factor is relabeled if vertices clash)
  compress:<h-vector>  compression complex of h_1, h_2, ... (h_0 is dropped)
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from typing import Any, Sequence

from .artinian import GradedQuotient, random_lsop, restriction_map
from .balanced import coloring_lsop, find_proper_coloring
from .complex import (
    CapacityError,
    FacetParseError,
    SimplicialComplex,
    is_flag,
    join,
    read_facets,
    vertices_of,
)
from .decomposition import DecompositionError, edge_link_survey, extract_boolean_decomposition
from .generators import (
    barycentric_subdivision,
    compression_complex,
    cross_polytope_boundary,
    polygon,
    simplex,
    simplex_boundary,
)
from .invariants import f_vector, gamma_from_h, h_vector, homology_ranks, is_homology_sphere, is_palindromic
from .suites import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CSV_HELP = """\
CSV output:
  invariants, decompose, artinian, survey: two columns "key,value"; list and
    object values are JSON-encoded.
  suite: one row per instance with columns
    suite,seed,instance,pass,inputs,outputs,witness
    (the last three JSON-encoded).
"""


class SpecError(ValueError):
    """A complex argument that is neither a readable file nor a generator."""


def _int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecError(f"{what}: expected an integer, got {text!r}") from None


def _split_join(arg: str) -> tuple[SimplicialComplex, SimplicialComplex]:
    # generator arguments may contain commas themselves, so try every split
    errors = []
    for i, ch in enumerate(arg):
        if ch != ",":
            continue
        try:
            return load_complex(arg[:i]), load_complex(arg[i + 1:])
        except (SpecError, FacetParseError, OSError) as exc:
            errors.append(str(exc))
    raise SpecError(f"join:{arg}: cannot split into two complexes" + (f" ({errors[-1]})" if errors else ""))


def load_complex(spec: str) -> SimplicialComplex:
    """Resolve a facet-file path or a generator expression."""
    head, sep, arg = spec.partition(":")
    if sep and not os.path.exists(spec):
        try:
            if head == "polygon":
                n = _int(arg, "polygon")
                return polygon(n, start=0 if n == 64 else 1)
            if head == "cross":
                return cross_polytope_boundary(_int(arg, "cross"))
            if head == "simplex":
                return simplex(range(1, _int(arg, "simplex") + 1))
            if head == "boundary":
                return simplex_boundary(_int(arg, "boundary"))
            if head == "sd":
                return barycentric_subdivision(load_complex(arg))
            if head == "join":
                return join(*_split_join(arg))
            if head == "compress":
                h = [_int(x, "compress") for x in arg.split(",") if x.strip()]
                if not h or h[0] != 1:
                    raise SpecError("compress: the h-vector must start with 1")
                return compression_complex(h[1:])
        except (CapacityError, ValueError) as exc:
            if isinstance(exc, (SpecError, FacetParseError)):
                raise
            raise SpecError(f"{spec}: {exc}") from None
    if not os.path.exists(spec):
        raise SpecError(f"{spec}: no such file or generator")
    return read_facets(spec)


# -- commands ----------------------------------------------------------------


def invariants_payload(k: SimplicialComplex) -> dict[str, Any]:
    h = h_vector(k)
    flag, nonfaces = is_flag(k)
    out: dict[str, Any] = {
        "d": k.dim + 1,
        "f": list(f_vector(k)),
        "h": list(h),
        "gamma": list(gamma_from_h(h)) if is_palindromic(h) else None,
        "flag": flag,
    }
    if not flag:
        out["witness"] = [list(vertices_of(m)) for m in nonfaces if m.bit_count() > 2]
    out["homology"] = {"betti": homology_ranks(k), "sphere": is_homology_sphere(k)}
    return out


def cmd_invariants(args) -> tuple[int, Any]:
    return EXIT_OK, invariants_payload(load_complex(args.complex))


def cmd_decompose(args) -> tuple[int, Any]:
    k = load_complex(args.complex)
    d = args.d if args.d is not None else k.dim + 1
    try:
        dec = extract_boolean_decomposition(k, d)
    except DecompositionError as exc:
        return EXIT_FAIL, exc.report()
    return EXIT_OK, dec.report()


def cmd_survey(args) -> tuple[int, Any]:
    k = load_complex(args.complex)
    try:
        report = edge_link_survey(k, recursive=not args.shallow)
    except ValueError as exc:
        return EXIT_FAIL, {"ok": False, "error": str(exc)}
    return (EXIT_OK if report.ok else EXIT_FAIL), report.to_dict()


def cmd_artinian(args) -> tuple[int, Any]:
    k = load_complex(args.complex)
    h = list(h_vector(k))
    if args.lsop == "coloring":
        coloring = find_proper_coloring(k, k.dim + 1)
        if coloring is None:
            return EXIT_FAIL, {"ok": False, "error": f"no proper {k.dim + 1}-coloring"}
        forms = coloring_lsop(k, coloring)
    else:
        forms = random_lsop(k, random.Random(args.seed))
    q = GradedQuotient(k, forms)
    payload = {"lsop": args.lsop, "seed": args.seed, "dims": q.dims, "h": h, "ok": q.dims == h}
    if args.dump_vertex is not None:
        payload["matrix"] = restriction_map(q, None, args.dump_vertex, args.degree).dump()
    return (EXIT_OK if payload["ok"] else EXIT_FAIL), payload


def _suite_params(pairs: Sequence[str]) -> dict[str, Any]:
    params: dict[str, Any] = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep:
            raise SpecError(f"--param expects key=value, got {item!r}")
        try:
            params[key] = json.loads(value)
        except json.JSONDecodeError:
            params[key] = value
        if isinstance(params[key], list):
            params[key] = tuple(params[key])
    return params


def cmd_suite(args) -> tuple[int, Any]:
    params = _suite_params(args.param)
    try:
        report = run_suite(args.name, seed=args.seed, **params)
    except TypeError as exc:
        raise SpecError(f"suite {args.name}: {exc}") from None
    return (EXIT_OK if report.ok else EXIT_FAIL), report


# -- output --------------------------------------------------------------------


def _render(payload: Any, fmt: str, timing: bool) -> str:
    if hasattr(payload, "to_dict") and hasattr(payload, "records"):
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["suite", "seed", "instance", "pass", "inputs", "outputs", "witness"])
            for r in payload.records:
                w.writerow([payload.suite, payload.seed, r.instance, r.passed,
                            json.dumps(r.inputs), json.dumps(r.outputs), json.dumps(r.witness)])
            return buf.getvalue()
        payload = payload.to_dict(timing=timing)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for key, value in payload.items():
            w.writerow([key, value if isinstance(value, (str, int, bool)) or value is None else json.dumps(value)])
        return buf.getvalue()
    return json.dumps(payload, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="seed for random choices (recorded in the output)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--quiet", action="store_true", help="print nothing; only the exit code reports")
    common.add_argument("--no-timing", action="store_true", help="omit wall_time from suite reports")

    parser = argparse.ArgumentParser(
        prog="flaggamma",
        description="Invariants, Boolean decompositions and verification suites for flag spheres.",
        epilog=__doc__.split("\n", 2)[2] + "\n" + CSV_HELP + "\nExit codes: 0 pass, 1 verification failure, 2 usage or parse error.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="f, h, gamma, flagness and homology")
    p.add_argument("complex")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("decompose", parents=[common], help="extract a Boolean decomposition")
    p.add_argument("complex")
    p.add_argument("--d", type=int, help="degree parameter (default: dim + 1)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("survey", parents=[common], help="edge-link survey of a flag sphere")
    p.add_argument("complex")
    p.add_argument("--shallow", action="store_true", help="do not recurse into edge links")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("artinian", parents=[common], help="graded dimensions of an Artinian reduction")
    p.add_argument("complex")
    p.add_argument("--lsop", choices=("random", "coloring"), default="random")
    p.add_argument("--dump-vertex", type=int, help="also dump the restriction matrix to the star of this vertex")
    p.add_argument("--degree", type=int, default=1, help="degree of the dumped matrix")
    p.set_defaults(func=cmd_artinian)

    p = sub.add_parser(
        "suite", parents=[common], help="run a verification suite",
        description=f"Suites: {', '.join(SUITES)}. Parameters are passed as --param key=value (JSON values).",
    )
    p.add_argument("name", choices=sorted(SUITES))
    p.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is None:
        args.seed = 7 if args.command == "suite" and args.name == "theta" else 0
    try:
        code, payload = args.func(args)
    except (SpecError, FacetParseError, OSError) as exc:
        if not args.quiet:
            print(f"flaggamma: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # a violated precondition on otherwise well-formed input
        if not args.quiet:
            print(f"flaggamma: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = _render(payload, args.format, timing=not args.no_timing)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    elif not args.quiet:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
