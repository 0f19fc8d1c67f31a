"""Command-line entry point.

Subcommands: analyze (invariant report for one instance), verify (property
suite), random (generate-and-verify a corpus), search-tightness (audit the
last-Betti-number bound and record strict instances), fixtures (export the
built-in lattices).  Exit codes: 0 success, 1 invalid input, 2
verification mismatch.
"""

import argparse
import json
import sys
import time
from pathlib import Path

from . import checks
from .errors import HibiresError, LatticeValidation
from .fixtures import FIXTURES, fixture_files, fixture_lattice
from .graphs import cover_lattice, graph_from_json_obj, normalize_graph, parse_graph_text
from .ideals import edge_ideal, hibi_ideal
from .invariants import invariant_report
from .lattice import (
    lattice_from_json_obj,
    lattice_to_text,
    parse_lattice_text,
    random_corpus,
)
from .oracle import betti_oracle, total_betti_in_degree
from .invariants import last_betti_lower_bound, pd_and_reg_H
from .graphs import graph_from_lattice
from .resolution import betti_table_from_basis, build_resolution


def _parse_field(text):
    if text in ("q", "Q"):
        return "Q"
    if text.startswith("p:"):
        return int(text[2:])
    raise argparse.ArgumentTypeError("field must be 'q' or 'p:<prime>'")


def load_lattice(path):
    """Read a lattice from a lattice/graph file (text or JSON)."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        obj = json.loads(text)
        if "elements" in obj:
            return lattice_from_json_obj(obj)
        G = graph_from_json_obj(obj)
        return _lattice_of_graph(G)
    head = stripped.split(None, 1)[0] if stripped else ""
    if head == "lattice":
        return parse_lattice_text(text)
    if head == "graph":
        return _lattice_of_graph(parse_graph_text(text))
    raise LatticeValidation(f"unrecognized input format in {path}")


def _lattice_of_graph(G):
    if not G.is_normalized:
        G = normalize_graph(sorted(G.edges))
    return cover_lattice(G)


def _emit(obj, fmt, no_timestamp):
    if fmt == "json":
        if not no_timestamp:
            obj = dict(obj, timestamp=time.strftime("%Y-%m-%dT%H:%M:%S"))
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        _emit_text(obj)


def _emit_text(obj):
    for key, value in obj.items():
        if isinstance(value, str) and "\n" in value:
            print(f"{key}:")
            print(value, end="")
        elif isinstance(value, (list, dict)):
            print(f"{key}: {json.dumps(value)}")
        else:
            print(f"{key}: {value}")


def _error_exit(exc):
    print(
        json.dumps({"error": type(exc).__name__, "message": str(exc)}),
        file=sys.stderr,
    )
    return 1


def cmd_analyze(args):
    try:
        L = load_lattice(args.input)
    except (HibiresError, OSError, ValueError) as exc:
        return _error_exit(exc)
    C = build_resolution(L)
    report = invariant_report(L, level_ranks=C.level_ranks())
    basis_table = betti_table_from_basis(L)
    out = report.to_json_obj()
    out["input"] = str(args.input)
    out["betti_diagram_H"] = basis_table.diagram()
    if args.level == "oracle":
        oracle_table = betti_oracle(hibi_ideal(L), field=args.field)
        match = oracle_table.entries == basis_table.entries
        out["oracle_verdict"] = "MATCH" if match else "MISMATCH"
        if not match:
            _emit(out, args.format, args.no_timestamp)
            return 2
    _emit(out, args.format, args.no_timestamp)
    return 0


def _verify_one(L, level, field, mutate=False):
    return checks.run_checks(L, level=level, field=field, mutate=mutate)


def cmd_verify(args):
    try:
        if args.fixtures:
            instances = [(name, fixture_lattice(name)) for name in FIXTURES]
        else:
            instances = [(str(p), load_lattice(p)) for p in args.input]
    except (HibiresError, OSError, ValueError) as exc:
        return _error_exit(exc)
    failed = None
    for name, L in instances:
        level = args.level
        if name == "FIG1" and level == "oracle":
            level = "formulas"  # full oracle on n=7 is out of desk scale
        report = _verify_one(
            L, level, args.field, mutate=args.debug_mutate_differential
        )
        for check_name, ok, detail in report.results:
            print(f"{'PASS' if ok else 'FAIL'} {name} {check_name}")
            if not ok and failed is None:
                failed = {
                    "instance": name,
                    "check": check_name,
                    "detail": repr(detail),
                }
        for kind, detail in report.findings:
            if kind != "bound_equality":
                print(f"FINDING {name} {kind} {detail}")
    if failed is not None:
        print(json.dumps({"counterexample": failed}), file=sys.stderr)
        return 2
    return 0


def cmd_random(args):
    corpus = random_corpus(args.count, args.seed, n_max=args.n)
    outdir = Path(args.out) if args.out else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    failures = 0
    if args.jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(
                pool.map(
                    _verify_one,
                    corpus,
                    [args.level] * len(corpus),
                    [args.field] * len(corpus),
                )
            )
    else:
        reports = [_verify_one(L, args.level, args.field) for L in corpus]
    for k, (L, report) in enumerate(zip(corpus, reports)):
        verdict = "MATCH" if report.ok else "MISMATCH"
        if not report.ok:
            failures += 1
        print(f"instance {k:04d} n={L.n} size={len(L)} {verdict}")
        if outdir:
            (outdir / f"instance_{k:04d}.lat").write_text(lattice_to_text(L))
            summary = {
                "index": k,
                "n": L.n,
                "size": len(L),
                "verdict": verdict,
                "checks": [
                    {"name": name, "ok": ok} for name, ok, _ in report.results
                ],
            }
            (outdir / f"instance_{k:04d}.json").write_text(
                json.dumps(summary, indent=2, sort_keys=True)
            )
        if not report.ok and failures == 1:
            first = report.first_failure()
            print(
                json.dumps(
                    {"counterexample": {"index": k, "check": first[0]}}
                ),
                file=sys.stderr,
            )
    print(f"{len(corpus) - failures}/{len(corpus)} MATCH")
    return 2 if failures else 0


def cmd_search_tightness(args):
    corpus = random_corpus(args.count, args.seed, n_max=args.n)
    lines = []
    strict = 0
    for k, L in enumerate(corpus):
        I = edge_ideal(graph_from_lattice(L))
        pd_RI, _ = pd_and_reg_H(L)
        t = total_betti_in_degree(I, pd_RI - 1, field=args.field)
        bound = last_betti_lower_bound(L)
        record = {
            "index": k,
            "n": L.n,
            "size": len(L),
            "t": t,
            "bound": bound,
            "strict": t > bound,
        }
        if t > bound:
            strict += 1
            lines.append(record)
        print(json.dumps(record, sort_keys=True))
    total = len(corpus)
    equal = total - strict
    print(
        f"equality {equal}/{total}"
        + (f"; {strict} strict instances recorded" if strict else "")
    )
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        with open(outdir / "tightness_findings.jsonl", "w") as fh:
            for record in lines:
                fh.write(json.dumps(record, sort_keys=True) + "\n")
    return 0


def cmd_fixtures(args):
    files = fixture_files()
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        for name, text in files.items():
            (outdir / f"{name}.lat").write_text(text)
            print(f"wrote {outdir / (name + '.lat')}")
    else:
        for name, text in files.items():
            print(f"# {name}")
            print(text, end="")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hibires",
        description=(
            "Resolutions and homological invariants of edge ideals of "
            "unmixed bipartite graphs, from their vertex-cover lattices."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--level", choices=["formulas", "oracle"], default="formulas")
        p.add_argument("--field", type=_parse_field, default="Q")
        p.add_argument("--format", choices=["json", "text"], default="json")
        p.add_argument("--no-timestamp", action="store_true")

    p = sub.add_parser("analyze", help="invariant report for one instance")
    p.add_argument("--input", required=True)
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run the property suite")
    p.add_argument("--input", nargs="*", default=[])
    p.add_argument("--fixtures", action="store_true")
    p.add_argument(
        "--debug-mutate-differential",
        action="store_true",
        help="flip one differential sign first (self-test of the checker)",
    )
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="generate and verify random lattices")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser(
        "search-tightness", help="audit the last-Betti-number lower bound"
    )
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    common(p)
    p.set_defaults(func=cmd_search_tightness)

    p = sub.add_parser("fixtures", help="export the built-in fixture lattices")
    p.add_argument("--out")
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "fixtures", False) is False and args.command == "verify" \
            and not args.input:
        print("verify needs --input files or --fixtures", file=sys.stderr)
        return 1
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
