"""Command-line front end.

Exit codes: 0 success (and verification PASS), 1 usage or input error,
2 verification FAIL, 3 cost-guard rejection.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from . import graph as gr
from .errors import CostGuardError, SleeError
from .invariants import ClassKind, ClassSpec
from .io import iter_graph6, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .search import (
    DEFAULT_TIE_TOL,
    DEFAULT_TOP,
    GraphSource,
    extremal_search,
    verify_clique_merge,
    verify_theorem,
)
from .spectral import l_spectrum, lee, moments, q_spectrum, slee, slee_series
from .walks import DEFAULT_K, dominance, enumerate_walks, walk_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAIL = 2
EXIT_COST = 3

LEMMAS = ("clique-merge",)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage().rstrip()}")


def fmt(x: float) -> str:
    """12 significant digits; scientific notation from 1e15 up."""
    x = float(x)
    if x == 0:
        return "0"
    if abs(x) >= 1e15:
        return f"{x:.11e}"
    return np.format_float_positional(x, precision=12, unique=False, fractional=False, trim="k")


def _add_input(p: argparse.ArgumentParser, suffix: str = "") -> None:
    p.add_argument(f"--graph6{suffix}", metavar="STR", help="graph6 string")
    p.add_argument(f"--graph6-file{suffix}", metavar="PATH", help="file of graph6 lines")
    p.add_argument(f"--edge-list{suffix}", metavar="PATH", help="plain edge-list file")


def _load_graphs(args, suffix: str = "") -> list[gr.Graph]:
    attr = suffix.replace("-", "_")
    g6 = getattr(args, f"graph6{attr}")
    g6_file = getattr(args, f"graph6_file{attr}")
    edges = getattr(args, f"edge_list{attr}")
    given = [x for x in (g6, g6_file, edges) if x is not None]
    if len(given) > 1:
        raise UsageError("give at most one of --graph6, --graph6-file, --edge-list")
    if g6 is not None:
        return [parse_graph6(g6)]
    if g6_file is not None:
        if g6_file == "-":
            return list(iter_graph6(sys.stdin))
        with open(g6_file) as fh:
            return list(iter_graph6(fh))
    if edges is not None:
        with open(edges) as fh:
            return [parse_edge_list(fh.read())]
    if suffix:
        raise UsageError(f"missing second graph (--graph6{suffix} ...)")
    return list(iter_graph6(sys.stdin))


def _one_graph(args, suffix: str = "") -> gr.Graph:
    graphs = _load_graphs(args, suffix)
    if len(graphs) != 1:
        raise UsageError(f"expected exactly one graph, got {len(graphs)}")
    return graphs[0]


def _build_parser() -> _Parser:
    parser = _Parser(prog="slee", description="Signless Laplacian Estrada index toolkit")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("compute", help="SLEE, LEE, spectra or moments of input graphs")
    _add_input(p)
    p.add_argument("--slee", action="store_true")
    p.add_argument("--lee", action="store_true")
    p.add_argument("--spectrum", action="store_true", help="signless Laplacian spectrum")
    p.add_argument("--l-spectrum", action="store_true", help="Laplacian spectrum")
    p.add_argument("--moments", action="store_true")
    p.add_argument("--series", action="store_true", help="truncated moment series and tail bound")
    p.add_argument("--K", type=int, default=DEFAULT_K)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("walks", help="semi-edge walk counts")
    _add_input(p)
    p.add_argument("--x", type=int)
    p.add_argument("--y", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--brute", action="store_true", help="count by explicit enumeration")
    p.add_argument("--table", action="store_true", help="print Q^k for k = 0..K")
    p.add_argument("--K", type=int, default=DEFAULT_K)

    p = sub.add_parser("dominance", help="compare closed-walk counts at two anchored vertices")
    _add_input(p)
    _add_input(p, "-2")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--x2", type=int, required=True)
    p.add_argument("--K", type=int, default=DEFAULT_K)

    p = sub.add_parser("construct", help="emit a named graph family member")
    p.add_argument(
        "--family",
        required=True,
        choices=("empty", "complete", "star", "path", "g_nr", "k_pqr"),
    )
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--format", choices=("graph6", "edge-list"), default="graph6")

    for name, helptext in (
        ("search", "rank one extremal class by SLEE"),
        ("verify", "check an extremal theorem or lemma"),
    ):
        p = sub.add_parser(name, help=helptext)
        if name == "search":
            p.add_argument("--class", dest="kind", required=True, choices=[k.value for k in ClassKind])
            p.add_argument("--param", type=int, required=True)
        else:
            p.add_argument("--theorem", choices=[k.value for k in ClassKind])
            p.add_argument("--lemma", choices=LEMMAS)
            p.add_argument("--limit", type=int, default=10)
        p.add_argument("--n", type=int)
        p.add_argument("--graph6-file", metavar="PATH")
        p.add_argument("--connected-only", action="store_true")
        p.add_argument("--tie-tol", type=float, default=DEFAULT_TIE_TOL)
        p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
        p.add_argument("--top", type=int, default=DEFAULT_TOP)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("convert", help="convert between edge-list and graph6")
    _add_input(p)
    p.add_argument("--to", required=True, choices=("graph6", "edge-list"))
    return parser


def _cmd_compute(args, out) -> int:
    if args.K < 0:
        raise UsageError("--K must be non-negative")
    graphs = _load_graphs(args)
    wanted = [
        k for k in ("slee", "lee", "spectrum", "l_spectrum", "moments", "series") if getattr(args, k)
    ] or ["slee"]
    records = []
    for g in graphs:
        rec = {}
        for key in wanted:
            if key == "slee":
                rec[key] = slee(g)
            elif key == "lee":
                rec[key] = lee(g)
            elif key == "spectrum":
                rec[key] = list(q_spectrum(g).values)
            elif key == "l_spectrum":
                rec[key] = list(l_spectrum(g).values)
            elif key == "moments":
                rec[key] = list(moments(g, args.K).values)
            else:
                value, bound = slee_series(g, args.K)
                rec[key] = {"value": value, "tail_bound": bound}
        records.append((g, rec))
    if args.format == "json":
        payload = [{"graph6": write_graph6(g).decode(), **rec} for g, rec in records]
        json.dump(payload, out, indent=2)
        out.write("\n")
        return EXIT_OK
    for g, rec in records:
        lines = []
        for key, val in rec.items():
            if key == "moments":
                text = " ".join(str(v) for v in val)
            elif key == "series":
                text = f"{fmt(val['value'])} tail<={fmt(val['tail_bound'])}"
            elif isinstance(val, list):
                text = " ".join(fmt(v) for v in val)
            else:
                text = fmt(val)
            lines.append(text if len(rec) == 1 else f"{key}: {text}")
        if len(records) > 1:
            out.write(write_graph6(g).decode() + "\n")
        out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_walks(args, out) -> int:
    g = _one_graph(args)
    if args.table:
        table = walk_table(g, args.K)
        for k, mat in enumerate(table.counts):
            out.write(f"k={k}\n")
            for row in mat:
                out.write(" ".join(str(int(v)) for v in row) + "\n")
        return EXIT_OK
    if args.x is None or args.k is None:
        raise UsageError("walks needs --x and --k (or --table)")
    y = args.x if args.y is None else args.y
    if args.brute:
        count = enumerate_walks(g, args.x, y, args.k)
    else:
        g.check_vertex(args.x)
        g.check_vertex(y)
        count = walk_table(g, args.k).counts[args.k][args.x, y]
    out.write(f"{int(count)}\n")
    return EXIT_OK


def _cmd_dominance(args, out) -> int:
    g = _one_graph(args)
    g2 = _one_graph(args, "-2") if any(
        getattr(args, a) is not None for a in ("graph6_2", "graph6_file_2", "edge_list_2")
    ) else g
    verdict = dominance(g, args.x, g2, args.x2, args.K)
    out.write(f"relation: {verdict.relation.value}\n")
    out.write(f"K: {verdict.K}\n")
    if verdict.witness_k is not None:
        out.write(f"witness_k: {verdict.witness_k}\n")
    if verdict.fail_k is not None:
        out.write(f"fail_k: {verdict.fail_k}\n")
    return EXIT_OK


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family} needs {' '.join(missing)}")


def _cmd_construct(args, out) -> int:
    fam = args.family
    if fam in ("empty", "complete", "star", "path"):
        _need(args, "n")
        g = {"empty": gr.empty, "complete": gr.complete, "star": gr.star, "path": gr.path}[fam](args.n)
    elif fam == "g_nr":
        _need(args, "n", "r")
        g = gr.g_nr(args.n, args.r)
    else:
        _need(args, "p", "q", "r")
        g = gr.k_pqr(args.p, args.q, args.r)
    if args.format == "graph6":
        out.write(write_graph6(g).decode() + "\n")
    else:
        out.write(write_edge_list(g))
    return EXIT_OK


def _source(args, kind: ClassKind) -> GraphSource:
    if args.graph6_file:
        return GraphSource.graph6(args.graph6_file)
    if args.n is None:
        raise UsageError("give --n for internal enumeration or --graph6-file")
    return GraphSource.internal(
        args.n, connected_only=args.connected_only or kind is ClassKind.CUT_EDGES
    )


def _spec_n(args, source: GraphSource) -> int:
    if args.n is not None:
        return args.n
    first = next(source.graphs(), None)
    if first is None:
        raise UsageError("graph6 stream is empty and --n was not given")
    return first.n


def _write_report_text(rep, out) -> None:
    head = f"{rep.spec.label()}: {rep.verdict} ({rep.members} members of {rep.candidates_examined} examined)"
    out.write(head + "\n")
    if rep.ranking:
        out.write(f"  best {write_graph6(rep.ranking[0][0].to_graph()).decode()} slee={fmt(rep.ranking[0][1])}\n")
    out.write(f"  expected {write_graph6(rep.expected.to_graph()).decode()}\n")
    for note in rep.notes:
        out.write(f"  note: {note}\n")


def _write_csv(rows, out) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["rank", "graph6", "slee"])
    for rank, g6, value in rows:
        writer.writerow([rank, g6, fmt(value)])
    out.write(buf.getvalue())


def _check_search_args(args) -> None:
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    if args.tie_tol < 0:
        raise UsageError("--tie-tol must be non-negative")


def _cmd_search(args, out) -> int:
    _check_search_args(args)
    kind = ClassKind(args.kind)
    source = _source(args, kind)
    try:
        spec = ClassSpec(kind, _spec_n(args, source), args.param)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = extremal_search(source, spec, args.tie_tol, args.jobs)
    if args.format == "json":
        json.dump(rep.to_dict(args.top), out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        _write_csv(rep.csv_rows()[: args.top], out)
    else:
        _write_report_text(rep, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    _check_search_args(args)
    if (args.theorem is None) == (args.lemma is None):
        raise UsageError("give exactly one of --theorem or --lemma")
    if args.lemma:
        cases = verify_clique_merge(args.limit)
        passed = all(c.holds for c in cases)
        if args.format == "json":
            payload = {
                "kind": args.lemma,
                "limit": args.limit,
                "passed": passed,
                "cases": [
                    {"p": c.p, "q": c.q, "r": c.r, "split": c.split, "merged": c.merged, "holds": c.holds}
                    for c in cases
                ],
            }
            json.dump(payload, out, indent=2)
            out.write("\n")
        elif args.format == "csv":
            out.write("p,q,r,split,merged,holds\n")
            for c in cases:
                out.write(f"{c.p},{c.q},{c.r},{fmt(c.split)},{fmt(c.merged)},{int(c.holds)}\n")
        else:
            for c in cases:
                out.write(
                    f"({c.p},{c.q}){c.r}: {fmt(c.split)} < {fmt(c.merged)} "
                    f"{'PASS' if c.holds else 'FAIL'}\n"
                )
            out.write(f"{'PASS' if passed else 'FAIL'} ({len(cases)} cases)\n")
        return EXIT_OK if passed else EXIT_FAIL

    kind = ClassKind(args.theorem)
    source = _source(args, kind)
    n = _spec_n(args, source)
    reports = verify_theorem(kind, n, source, args.tie_tol, args.jobs)
    passed = all(r.passed for r in reports)
    if args.format == "json":
        payload = {
            "kind": kind.value,
            "n": n,
            "passed": passed,
            "reports": [r.to_dict(args.top) for r in reports],
        }
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        out.write("param,verdict,members,best_graph6,best_slee,expected_graph6\n")
        for r in reports:
            best = r.csv_rows()[0] if r.ranking else (0, "", 0.0)
            exp = write_graph6(r.expected.to_graph()).decode()
            out.write(f"{r.spec.param},{r.verdict},{r.members},{best[1]},{fmt(best[2])},{exp}\n")
    else:
        for r in reports:
            _write_report_text(r, out)
        out.write(f"{'PASS' if passed else 'FAIL'}\n")
    return EXIT_OK if passed else EXIT_FAIL


def _cmd_convert(args, out) -> int:
    for g in _load_graphs(args):
        if args.to == "graph6":
            out.write(write_graph6(g).decode() + "\n")
        else:
            out.write(write_edge_list(g))
    return EXIT_OK


_COMMANDS = {
    "compute": _cmd_compute,
    "walks": _cmd_walks,
    "dominance": _cmd_dominance,
    "construct": _cmd_construct,
    "search": _cmd_search,
    "verify": _cmd_verify,
    "convert": _cmd_convert,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"slee: {exc}\n")
        return EXIT_USAGE
    except CostGuardError as exc:
        err.write(f"slee: cost guard: {exc}\n")
        return EXIT_COST
    except (SleeError, ValueError, OSError) as exc:
        err.write(f"slee: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
