"""Command line front end.

Matroids come from a JSON document (a file path or an inline literal),
from --named, or from --uniform.  Output is canonical and deterministic:
running the same command twice produces identical bytes.

Exit codes: 0 success, 2 parse errors, 3 size guards, 4 internal
invariant violations or failed verification checks.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import __version__
from .algebra import RationalQT
from .buildings import BuildingSet
from .catalog import NAMED_MATROIDS, named_matroid
from .checks import SUITE_NAMES, run_suites
from .errors import MatroidZetaError, ParseError, TooLarge
from .lattice import FlatLattice
from .matroid import Matroid
from .oracle import truncated_zeta_sum
from .zeta import (KINDS, collapse, fy_hilbert_series, h_polynomials,
                   motivic_zeta, poincare_polynomials, topological_zeta)


def _load_document(text_or_path):
    """JSON from an inline literal or a file path."""
    s = text_or_path.strip()
    if s.startswith("{") or s.startswith("["):
        raw = s
    else:
        try:
            with open(text_or_path, "r", encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {text_or_path}: {exc}") from exc
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {text_or_path}: {exc}") from exc


def _matroid_from_document(doc):
    if not isinstance(doc, dict) or "type" not in doc:
        raise ParseError('a matroid document needs a "type" field')
    kind = doc["type"]
    try:
        if kind == "bases":
            return Matroid(int(doc["n"]), doc["bases"])
        if kind == "uniform":
            return Matroid.uniform(int(doc["r"]), int(doc["n"]))
        if kind == "graph":
            return Matroid.graphic([tuple(int(v) for v in e)
                                    for e in doc["edges"]])
        if kind == "named":
            return named_matroid(doc["name"])
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"bad matroid description: {exc}") from exc
    raise ParseError(f"unknown matroid type {kind!r}")


def _load_matroid(args):
    """Resolve the matroid source options; exactly one must be given."""
    sources = [s for s in (args.spec, args.named, args.uniform) if s]
    if len(sources) != 1:
        raise ParseError("provide exactly one matroid source: a JSON document, "
                         "--named, or --uniform")
    if args.named:
        return named_matroid(args.named), args.named
    if args.uniform:
        r, n = args.uniform
        return Matroid.uniform(r, n), f"uniform-{r}-{n}"
    doc = _load_document(args.spec)
    label = args.spec if not args.spec.strip().startswith("{") else "inline"
    return _matroid_from_document(doc), label


def _resolve_building(lattice, option):
    if option == "max":
        return BuildingSet.maximal(lattice)
    if option == "min":
        return BuildingSet.minimal(lattice)
    doc = _load_document(option)
    if not isinstance(doc, list):
        raise ParseError("a building-set document must be a JSON list of flats")
    return BuildingSet.from_flats(lattice, doc)


def _add_source_arguments(sub):
    sub.add_argument("spec", nargs="?",
                     help="matroid document: a JSON file path or an inline "
                          'JSON object such as {"type":"uniform","r":2,"n":3}')
    sub.add_argument("--named", choices=NAMED_MATROIDS,
                     help="use a catalog matroid")
    sub.add_argument("--uniform", nargs=2, type=int, metavar=("RANK", "SIZE"),
                     help="use the uniform matroid of the given rank and size")
    sub.add_argument("--force", action="store_true",
                     help="bypass the size guards")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="matroid-zeta",
        description="Exact motivic, local, reduced, and topological zeta "
                    "functions of matroids.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("char", help="characteristic polynomial and its "
                                    "reduced form")
    _add_source_arguments(p)

    p = sub.add_parser("zeta", help="collapsed zeta function")
    _add_source_arguments(p)
    p.add_argument("--kind", choices=KINDS, default="full")
    p.add_argument("--building-set", default="max",
                   help='"max", "min", or a JSON list of flats (file or inline)')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--expand", type=int, metavar="N",
                   help="also print the first N+1 series coefficients")

    p = sub.add_parser("topzeta", help="topological zeta function")
    _add_source_arguments(p)

    p = sub.add_parser("poincare", help="Poincare polynomial, H-polynomial, "
                                        "and the Hilbert series of the "
                                        "associated graded ring")
    _add_source_arguments(p)
    p.add_argument("--building-set", default="max")

    p = sub.add_parser("oracle", help="truncated lattice-point sum")
    _add_source_arguments(p)
    p.add_argument("--tmax", type=int, required=True, metavar="N")
    p.add_argument("--kind", choices=KINDS, default="full")

    p = sub.add_parser("verify", help="run the verification suites")
    _add_source_arguments(p)
    p.add_argument("--suite", choices=("all",) + SUITE_NAMES, default="all")
    p.add_argument("--tmax", type=int, default=6, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--report-dir", metavar="DIR",
                   help="write report.json, report.csv, and summary figures")
    return parser


def _cmd_char(args):
    matroid, _ = _load_matroid(args)
    lattice = FlatLattice(matroid, force=args.force)
    print(lattice.char_poly())
    print(f"reduced: {lattice.reduced_char_poly()}")
    return 0


def _cmd_zeta(args):
    matroid, _ = _load_matroid(args)
    lattice = FlatLattice(matroid, force=args.force)
    building = _resolve_building(lattice, args.building_set)
    rational = collapse(motivic_zeta(matroid, lattice, building, args.kind))
    series = None
    if args.expand is not None:
        if args.expand < 0:
            raise ParseError("--expand takes a nonnegative order")
        series = rational.series_coefficients(args.expand)
    if args.format == "json":
        payload = {"kind": args.kind,
                   "building_set": args.building_set,
                   "rational": rational.to_json()}
        if series is not None:
            payload["series"] = [c.to_json() for c in series]
        print(json.dumps(payload, indent=2, sort_keys=True))
        return 0
    if series is not None:
        for k, c in enumerate(series):
            print(f"T^{k}: {c}")
    print(rational)
    return 0


def _cmd_topzeta(args):
    matroid, _ = _load_matroid(args)
    lattice = FlatLattice(matroid, force=args.force)
    ztop = topological_zeta(matroid, lattice)
    print(ztop)
    print(f"value at 0: {ztop.value_at_zero()}")
    print(f"derivative at 0: {ztop.derivative_at_zero()}")
    return 0


def _cmd_poincare(args):
    matroid, _ = _load_matroid(args)
    if not matroid.is_loopless:
        raise ParseError("the Poincare and H polynomials need a loopless matroid")
    lattice = FlatLattice(matroid, force=args.force)
    building = _resolve_building(lattice, args.building_set)
    fact = frozenset(building.fact_top)
    p = poincare_polynomials(lattice, building)[fact]
    h = h_polynomials(lattice, building)[fact]
    print(f"reduced-poincare: {p}")
    print(f"h-polynomial: {h}")
    print(f"fy-hilbert-series: {fy_hilbert_series(lattice, building)}")
    return 0


def _cmd_oracle(args):
    matroid, _ = _load_matroid(args)
    if args.tmax < 0:
        raise ParseError("--tmax takes a nonnegative order")
    series = truncated_zeta_sum(matroid, args.kind, args.tmax,
                                force=args.force)
    for k, c in enumerate(series):
        print(f"T^{k}: {c}")
    return 0


def _write_report_files(report, directory):
    os.makedirs(directory, exist_ok=True)
    with open(os.path.join(directory, "report.json"), "w",
              encoding="utf-8") as fh:
        json.dump(report.to_json(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    with open(os.path.join(directory, "report.csv"), "w", newline="",
              encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["suite", "check", "status", "detail"])
        for r in report.results:
            writer.writerow([r.suite, r.name,
                             "pass" if r.passed else "fail", r.detail])
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    suites = sorted({r.suite for r in report.results})
    good = [sum(1 for r in report.results if r.suite == s and r.passed)
            for s in suites]
    bad = [sum(1 for r in report.results if r.suite == s and not r.passed)
           for s in suites]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(suites, good, color="#2a7e43", label="pass")
    ax.bar(suites, bad, bottom=good, color="#b23a3a", label="fail")
    ax.set_ylabel("checks")
    ax.set_title(f"verification checks: {report.subject}")
    ax.legend()
    fig.autofmt_xdate(rotation=30)
    fig.tight_layout()
    fig.savefig(os.path.join(directory, "summary.png"), dpi=120)
    plt.close(fig)

    if report.durations:
        names = list(report.durations)
        times = [report.durations[s] for s in names]
        fig, ax = plt.subplots(figsize=(7, 4))
        ax.bar(names, times, color="#44639c")
        ax.set_ylabel("seconds")
        ax.set_title(f"suite wall time: {report.subject}")
        fig.autofmt_xdate(rotation=30)
        fig.tight_layout()
        fig.savefig(os.path.join(directory, "timings.png"), dpi=120)
        plt.close(fig)


def _cmd_verify(args):
    matroid, label = _load_matroid(args)
    report = run_suites(matroid, (args.suite,), tmax=args.tmax,
                        seed=args.seed, force=args.force, subject=label)
    print(report.render_text())
    if args.report_dir:
        _write_report_files(report, args.report_dir)
    return 0 if report.passed else 4


_COMMANDS = {
    "char": _cmd_char,
    "zeta": _cmd_zeta,
    "topzeta": _cmd_topzeta,
    "poincare": _cmd_poincare,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
}


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MatroidZetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
