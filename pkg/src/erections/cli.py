"""Command-line front end.

Exit status: 0 on success, 1 for domain errors (e.g. an invalid matroid),
2 for usage and parse errors.
"""
from __future__ import annotations

import argparse
import os
import sys

from . import io
from .bounds import VARIANTS, check_free_lc, check_log_concavity, minimize_bound
from .core import Matroid, build_from_copoints, validate_copoint_family, whitney
from .erection import ErectionResult, erect_with, free_erection, free_erection_via_pair, random_matroid
from .errors import InvalidCopoints, MatroidError, ParseError
from .plp import (
    BETA_CAP,
    beta_subsets,
    export_dot,
    graph_from_lines,
    graph_from_rank3,
    plp_bound_check,
    restrict,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _warn(messages):
    for msg in messages:
        print(f"warning: {msg}", file=sys.stderr)


def _load_matroid(path: str) -> Matroid:
    parsed = io.parse_matroid_file(_read(path))
    _warn(parsed.warnings)
    m = build_from_copoints(parsed.n, parsed.sets)
    if parsed.rank is not None and parsed.rank != m.rank:
        raise InvalidCopoints(f"declared rank {parsed.rank}, copoints give rank {m.rank}")
    return m


def _load_graph(path: str):
    parsed = io.parse_any(_read(path))
    _warn(parsed.warnings)
    if parsed.header == "points":
        return graph_from_lines(parsed.n, parsed.sets)
    m = build_from_copoints(parsed.n, parsed.sets)
    return graph_from_rank3(m)


def _parse_set_list(spec: str, n: int):
    """A file of sets, or an inline list separated by ';' or ','."""
    if os.path.exists(spec):
        sets, warnings = io.parse_sets(_read(spec), n)
        _warn(warnings)
        return sets
    sep = ";" if ";" in spec else ","
    text = "\n".join(tok for tok in spec.split(sep) if tok.strip())
    sets, warnings = io.parse_sets(text, n)
    _warn(warnings)
    return sets


def _print_erection(res: ErectionResult):
    print(f"trivial={str(res.trivial).lower()}")
    print(f"count={res.count}")
    sys.stdout.write(io.format_family(res.new_copoints))


def cmd_validate(args):
    parsed = io.parse_matroid_file(_read(args.file))
    _warn(parsed.warnings)
    check = validate_copoint_family(parsed.n, parsed.sets)
    if not check:
        print(f"invalid: {check.describe()}")
        return 1
    m = build_from_copoints(parsed.n, parsed.sets, validate=False)
    if parsed.rank is not None and parsed.rank != m.rank:
        print(f"invalid: declared rank {parsed.rank}, copoints give rank {m.rank}")
        return 1
    print(f"valid n={m.n} rank={m.rank}")
    return 0


def cmd_lattice(args):
    m = _load_matroid(args.file)
    for rank, fam in enumerate(m.flats_by_rank):
        print(f"# rank {rank}: {len(fam)}")
        sys.stdout.write(io.format_family(fam))
    return 0


def cmd_whitney(args):
    print(" ".join(map(str, whitney(_load_matroid(args.file)))))
    return 0


def cmd_free(args):
    m = _load_matroid(args.file)
    _print_erection(free_erection_via_pair(m) if args.via == "pair" else free_erection(m))
    return 0


def cmd_erect(args):
    m = _load_matroid(args.file)
    _print_erection(erect_with(m, _parse_set_list(args.add, m.n)))
    return 0


def cmd_random(args):
    m = random_matroid(args.n, args.seed, args.intensity)
    sys.stdout.write(io.format_matroid(m))
    return 0


def cmd_check_lc(args):
    report = check_log_concavity(_load_matroid(args.file), args.variant)
    for k, lhs, rhs, holds in report.per_k:
        print(f"k={k} lhs={lhs} rhs={rhs} holds={str(holds).lower()}")
    print(f"variant={report.variant} all_hold={str(report.all_hold).lower()}")
    return 0


def cmd_check_free_lc(args):
    r = check_free_lc(_load_matroid(args.file))
    print(
        f"holds={str(r.holds).lower()} copoints={r.copoints} "
        f"colines={r.colines} free_copoints={r.free_copoints}"
    )
    return 0


def cmd_bound(args):
    m = _load_matroid(args.file)
    mode = args.mode or ("exact" if m.n <= 9 else "heuristic")
    report = minimize_bound(
        m, mode, args.budget, workers=args.workers, seed=args.seed, exact_cap=args.exact_cap
    )
    print(report.format())
    return 0


def cmd_beta(args):
    found = beta_subsets(_load_graph(args.file), args.cap, args.workers)
    print(f"beta={len(found)}")
    if args.list:
        for fam in found:
            point_set = 0
            for ln in fam:
                point_set |= ln
            print(io.format_set(point_set))
    return 0


def cmd_plp_check(args):
    print(plp_bound_check(_load_graph(args.file), args.cap, args.workers).format())
    return 0


def cmd_dot(args):
    g = _load_graph(args.file)
    if args.restrict:
        g = restrict(g, _parse_set_list(args.restrict, g.n))
    sys.stdout.write(export_dot(g))
    return 0


def _unit_interval(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError("intensity must lie in [0, 1]")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="erections", description="Erections of simple matroids and related bounds."
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_text, with_file=True):
        p = sub.add_parser(name, help=help_text)
        if with_file:
            p.add_argument("file", help="input file, '-' for stdin")
        p.set_defaults(func=func)
        return p

    verb("validate", cmd_validate, "check a copoint family")
    verb("lattice", cmd_lattice, "print all flats by rank")
    verb("whitney", cmd_whitney, "print the Whitney numbers")
    p = verb("free", cmd_free, "free erection")
    p.add_argument("--via", choices=("expand", "pair"), default="expand")
    p = verb("erect", cmd_erect, "erection from an added clutter")
    p.add_argument("--add", required=True, help="file of sets, or inline 'a;b;c'")
    p = verb("random", cmd_random, "random matroid by iterated erection", with_file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--intensity", type=_unit_interval, required=True)
    p = verb("check-lc", cmd_check_lc, "log-concavity of the Whitney numbers")
    p.add_argument("--variant", choices=VARIANTS, default="i")
    verb("check-free-lc", cmd_check_free_lc, "copoint/coline/free-erection inequality")
    p = verb("bound", cmd_bound, "minimised copoint bound for the free erection")
    p.add_argument("--mode", choices=("exact", "heuristic"))
    p.add_argument("--budget", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--exact-cap", type=_positive, default=10)
    for name, func, text in (
        ("beta", cmd_beta, "count property-beta line subsets"),
        ("plp-check", cmd_plp_check, "points-lines-planes bound on the incidence graph"),
    ):
        p = verb(name, func, text)
        p.add_argument("--workers", type=_positive, default=1)
        p.add_argument("--cap", type=_positive, default=BETA_CAP)
        if name == "beta":
            p.add_argument("--list", action="store_true", help="print each pre(A)")
    p = verb("dot", cmd_dot, "DOT rendering of the incidence graph")
    p.add_argument("--restrict", help="lines to keep: file, or inline 'a;b;c'")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (MatroidError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
