"""Command-line interface: single-graph invariant queries, batch graph6
processing, and exhaustive verification sweeps.

    starzagreb info GRAPH [--format edgelist|graph6] [--json]
    starzagreb zagreb GRAPH --p P [--method direct|star|recurrence|all] [--json]
    starzagreb genfunc GRAPH [--json]
    starzagreb verify GRAPH [--p-max P] [--m-max M] [--json]
    starzagreb verify --exhaustive --n N [--p-max P] [--m-max M] [--jobs J] [--json]

Graphs come from edge-list files (first significant line is the vertex
count, then one "u v" pair per line, '#' comments allowed) or from graph6
files (one graph per line, each processed independently; a bad line yields
an error record, not an abort).  The format is inferred from a .g6 suffix
and can be forced with --format.

With --json each graph yields one JSON document per line; unbounded
integer values are rendered as decimal strings so nothing overflows on the
consumer side.  Diagnostics go to standard error.  Exit codes: 0 success,
1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import sys
from typing import Iterable, Iterator, Sequence

from .graph import (
    Graph,
    GraphFormatError,
    degrees,
    frequency_sequence,
    parse_edge_list,
    parse_graph6,
    to_graph6,
)
from .oracle import (
    MAX_ENUM_N,
    TheoremReport,
    labeled_graph_from_mask,
    verify_all_identities,
)
from .star import Classification, classify, star_sequence
from .zagreb import genfunc_numerator, zagreb_by_recurrence, zagreb_direct, zagreb_from_stars

__all__ = ["main", "cmd_info", "cmd_zagreb", "cmd_genfunc", "cmd_verify"]


# ---------------------------------------------------------------------------
# records

def info_record(identifier: str, g: Graph) -> dict:
    f = frequency_sequence(g)
    s = star_sequence(g)
    cls = classify(s) if g.n >= 2 else Classification("other")
    return {
        "type": "info",
        "identifier": identifier,
        "graph6": to_graph6(g) if g.n <= 62 else None,
        "n": g.n,
        "m": g.m,
        "degrees": degrees(g),
        "frequency": list(f.counts),
        "stars": {
            "s1": str(s.s1),
            "first_doubled": str(s.adjusted_first),
            "sequence": [str(x) for x in s.as_tuple()],
        },
        "classification": cls.label,
    }


def zagreb_record(identifier: str, g: Graph, p: int, method: str) -> dict:
    values: dict[str, str] = {}
    if method in ("direct", "all"):
        values["direct"] = str(zagreb_direct(g, p))
    if method in ("star", "all") and p >= 1:
        values["star"] = str(zagreb_from_stars(star_sequence(g), p))
    if method in ("recurrence", "all"):
        values["recurrence"] = str(zagreb_by_recurrence(g, p))
    rec = {
        "type": "zagreb",
        "identifier": identifier,
        "n": g.n,
        "m": g.m,
        "p": p,
        "method": method,
        "values": values,
    }
    if method == "all":
        rec["agree"] = len(set(values.values())) == 1
    return rec


def genfunc_record(identifier: str, g: Graph) -> dict:
    gf = genfunc_numerator(g)
    return {
        "type": "genfunc",
        "identifier": identifier,
        "n": g.n,
        "m": g.m,
        "numerator": [str(a) for a in gf.numerator],
        "denominator_factors": gf.denominator_factors(),
        "strictly_proper": gf.strictly_proper,
    }


def report_to_dict(report: TheoremReport) -> dict:
    theorems = {}
    for res in report.theorems:
        theorems[res.name] = {
            "status": "pass" if res.passed else "fail",
            "checks": len(res.checks),
            "residuals": {c.label: str(c.residual) for c in res.checks},
        }
    errata = [
        {
            "id": note.note_id,
            "triggered": note.triggered,
            "note": note.description,
            "witness": note.witness,
        }
        for note in report.errata
    ]
    return {
        "type": "report",
        "identifier": report.graph_id,
        "n": report.n,
        "m": report.m,
        "p_max": report.p_max,
        "m_max": report.m_max,
        "passed": report.passed,
        "checks": report.check_count,
        "theorems": theorems,
        "errata": errata,
    }


def error_record(identifier: str, exc: Exception) -> dict:
    return {"type": "error", "identifier": identifier, "error": str(exc)}


# ---------------------------------------------------------------------------
# human rendering

def _kv_block(rows: list[tuple[str, str]]) -> str:
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)} : {v}" for k, v in rows)


def render_info(rec: dict) -> str:
    stars = rec["stars"]
    return _kv_block(
        [
            ("identifier", rec["identifier"]),
            ("graph6", rec["graph6"] or "-"),
            ("n", str(rec["n"])),
            ("m", str(rec["m"])),
            ("degrees", " ".join(map(str, rec["degrees"]))),
            ("frequency", " ".join(map(str, rec["frequency"]))),
            ("stars", " ".join(stars["sequence"]) or "-"),
            ("S1", stars["s1"]),
            ("2*S1", stars["first_doubled"]),
            ("classification", rec["classification"]),
        ]
    )


def render_zagreb(rec: dict) -> str:
    rows = [
        ("identifier", rec["identifier"]),
        ("n", str(rec["n"])),
        ("m", str(rec["m"])),
        ("p", str(rec["p"])),
    ]
    rows.extend((route, value) for route, value in rec["values"].items())
    if "agree" in rec:
        rows.append(("agree", "yes" if rec["agree"] else "NO"))
    return _kv_block(rows)


def render_genfunc(rec: dict) -> str:
    return _kv_block(
        [
            ("identifier", rec["identifier"]),
            ("n", str(rec["n"])),
            ("m", str(rec["m"])),
            ("numerator", " ".join(rec["numerator"])),
            ("denominator", "".join(f"({f})" for f in rec["denominator_factors"])),
            ("strictly proper", "yes" if rec["strictly_proper"] else "no"),
        ]
    )


def _triggered_ids(rec: dict) -> list[str]:
    return [e["id"] for e in rec["errata"] if e["triggered"]]


def render_report_full(rec: dict) -> str:
    status = "PASS" if rec["passed"] else "FAIL"
    lines = [
        _kv_block(
            [
                ("identifier", rec["identifier"]),
                ("n", str(rec["n"])),
                ("m", str(rec["m"])),
                ("status", f"{status} ({rec['checks']} checks)"),
            ]
        )
    ]
    for name, info in rec["theorems"].items():
        lines.append(f"  {name.ljust(20)} {info['status']}  {info['checks']} checks")
        if info["status"] == "fail":
            for label, residual in info["residuals"].items():
                if residual != "0":
                    lines.append(f"    FAIL {label} residual={residual}")
    for note in rec["errata"]:
        if note["triggered"]:
            witness = " ".join(f"{k}={v}" for k, v in note["witness"].items())
            lines.append(f"  erratum {note['id']} [triggered] {witness}")
        else:
            lines.append(f"  erratum {note['id']} [not observable here]")
    return "\n".join(lines)


def render_report_line(rec: dict) -> str:
    status = "PASS" if rec["passed"] else "FAIL"
    errata = ",".join(_triggered_ids(rec)) or "-"
    lines = [
        f"{status} {rec['identifier']} n={rec['n']} m={rec['m']} "
        f"checks={rec['checks']} errata={errata}"
    ]
    if not rec["passed"]:
        for name, info in rec["theorems"].items():
            if info["status"] == "fail":
                for label, residual in info["residuals"].items():
                    if residual != "0":
                        lines.append(f"  FAIL {name}/{label} residual={residual}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# input handling

def _resolve_format(args: argparse.Namespace) -> str:
    if args.format:
        return args.format
    return "graph6" if args.input.endswith(".g6") else "edgelist"


def _iter_inputs(path: str, fmt: str) -> Iterator[tuple[str, Graph | GraphFormatError]]:
    """Yield (identifier, graph) pairs; parse failures yield the exception."""
    if fmt == "graph6":
        with open(path, encoding="ascii", errors="replace") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line:
                    continue
                ident = f"{path}:{lineno}"
                try:
                    yield ident, parse_graph6(line)
                except GraphFormatError as exc:
                    yield ident, exc
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
        try:
            yield path, parse_edge_list(text)
        except GraphFormatError as exc:
            yield path, exc


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(rec: dict, as_json: bool, renderer, *, pad: bool = False) -> None:
    if as_json:
        print(json.dumps(rec))
    else:
        print(renderer(rec))
        if pad:
            print()


def _emit_parse_error(ident: str, exc: Exception, as_json: bool) -> None:
    if as_json:
        print(json.dumps(error_record(ident, exc)))
    print(f"error: {ident}: {exc}", file=sys.stderr)


# ---------------------------------------------------------------------------
# commands

def _run_simple(args: argparse.Namespace, build) -> int:
    fmt = _resolve_format(args)
    had_error = False
    batch = fmt == "graph6"
    for ident, item in _iter_inputs(args.input, fmt):
        if isinstance(item, GraphFormatError):
            had_error = True
            _emit_parse_error(ident, item, args.json)
            continue
        build(ident, item, batch)
    return 2 if had_error else 0


def cmd_info(args: argparse.Namespace) -> int:
    def build(ident: str, g: Graph, batch: bool) -> None:
        _emit(info_record(ident, g), args.json, render_info, pad=batch)

    return _run_simple(args, build)


def cmd_zagreb(args: argparse.Namespace) -> int:
    if args.p < 0:
        return _usage_error("--p must be a non-negative integer")
    if args.p == 0 and args.method == "star":
        return _usage_error(
            "the star route is undefined at p = 0 (it would yield 2m, not n); "
            "use --method direct"
        )
    disagreement = False

    def build(ident: str, g: Graph, batch: bool) -> None:
        nonlocal disagreement
        rec = zagreb_record(ident, g, args.p, args.method)
        if rec.get("agree") is False:
            disagreement = True
        _emit(rec, args.json, render_zagreb, pad=batch)

    code = _run_simple(args, build)
    if disagreement:
        print("error: evaluation routes disagree; this is a bug", file=sys.stderr)
        return 1
    return code


def cmd_genfunc(args: argparse.Namespace) -> int:
    def build(ident: str, g: Graph, batch: bool) -> None:
        _emit(genfunc_record(ident, g), args.json, render_genfunc, pad=batch)

    return _run_simple(args, build)


def _verify_mask_task(task: tuple[int, int, int, int]) -> dict:
    n, mask, p_max, m_max = task
    g = labeled_graph_from_mask(n, mask)
    report = verify_all_identities(g, p_max, m_max, graph_id=f"n={n}:mask={mask}")
    return report_to_dict(report)


def _verify_line_task(task: tuple[str, str, int, int]) -> dict:
    ident, line, p_max, m_max = task
    try:
        g = parse_graph6(line)
    except GraphFormatError as exc:
        return error_record(ident, exc)
    report = verify_all_identities(g, p_max, m_max, graph_id=ident)
    return report_to_dict(report)


def _map_tasks(fn, tasks: Iterable, jobs: int) -> Iterator[dict]:
    if jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            yield from pool.imap(fn, tasks, chunksize=128)
    else:
        for task in tasks:
            yield fn(task)


def cmd_verify(args: argparse.Namespace) -> int:
    if args.p_max < 1:
        return _usage_error("--p-max must be at least 1")
    if args.m_max < 0:
        return _usage_error("--m-max must be non-negative")
    if args.jobs < 1:
        return _usage_error("--jobs must be at least 1")

    compact = True
    if args.exhaustive:
        if args.input:
            return _usage_error("--exhaustive does not take an input file")
        if args.n is None:
            return _usage_error("--exhaustive requires --n")
        if not 1 <= args.n <= MAX_ENUM_N:
            return _usage_error(f"--n must be between 1 and {MAX_ENUM_N}")
        nmasks = 1 << (args.n * (args.n - 1) // 2)
        tasks = ((args.n, mask, args.p_max, args.m_max) for mask in range(nmasks))
        records = _map_tasks(_verify_mask_task, tasks, args.jobs)
    else:
        if args.n is not None:
            return _usage_error("--n only applies with --exhaustive")
        if not args.input:
            return _usage_error("verify needs an input file or --exhaustive")
        fmt = _resolve_format(args)
        if fmt == "graph6":
            with open(args.input, encoding="ascii", errors="replace") as fh:
                tasks = [
                    (f"{args.input}:{lineno}", line.strip(), args.p_max, args.m_max)
                    for lineno, line in enumerate(fh, start=1)
                    if line.strip()
                ]
            records = _map_tasks(_verify_line_task, tasks, args.jobs)
        else:
            compact = False
            records = iter(_verify_edge_list(args))

    graphs = checks = failures = errata_hits = 0
    had_error = False
    renderer = render_report_line if compact else render_report_full
    for rec in records:
        if rec["type"] == "error":
            had_error = True
            _emit_parse_error(rec["identifier"], ValueError(rec["error"]), args.json)
            continue
        graphs += 1
        checks += rec["checks"]
        if not rec["passed"]:
            failures += 1
        errata_hits += len(_triggered_ids(rec))
        _emit(rec, args.json, renderer, pad=not compact)

    summary = {
        "type": "summary",
        "graphs": graphs,
        "checks": checks,
        "failures": failures,
        "errata_observations": errata_hits,
        "passed": failures == 0,
    }
    if args.json:
        print(json.dumps(summary))
    else:
        status = "PASS" if failures == 0 else "FAIL"
        print(
            f"summary: graphs={graphs} checks={checks} failures={failures} "
            f"errata_observations={errata_hits} -> {status}"
        )
    if failures:
        return 1
    return 2 if had_error else 0


def _verify_edge_list(args: argparse.Namespace) -> list[dict]:
    with open(args.input, encoding="utf-8") as fh:
        text = fh.read()
    try:
        g = parse_edge_list(text)
    except GraphFormatError as exc:
        return [error_record(args.input, exc)]
    report = verify_all_identities(g, args.p_max, args.m_max, graph_id=args.input)
    return [report_to_dict(report)]


# ---------------------------------------------------------------------------
# entry point

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starzagreb",
        description="Star sequences, frequency sequences and general first "
        "Zagreb indices of simple graphs, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, input_required: bool = True) -> None:
        if input_required:
            p.add_argument("input", help="edge-list or graph6 file")
        else:
            p.add_argument("input", nargs="?", help="edge-list or graph6 file")
        p.add_argument(
            "--format",
            choices=("edgelist", "graph6"),
            default=None,
            help="input format; default: graph6 for .g6 files, else edgelist",
        )
        p.add_argument("--json", action="store_true", help="one JSON document per graph")

    p_info = sub.add_parser("info", help="degrees, frequency and star sequences, classification")
    add_common(p_info)
    p_info.set_defaults(handler=cmd_info)

    p_zag = sub.add_parser("zagreb", help="general first Zagreb index Z_p")
    add_common(p_zag)
    p_zag.add_argument("--p", type=int, required=True, help="exponent p >= 0")
    p_zag.add_argument(
        "--method",
        choices=("direct", "star", "recurrence", "all"),
        default="all",
        help="evaluation route; 'all' cross-checks every route",
    )
    p_zag.set_defaults(handler=cmd_zagreb)

    p_gf = sub.add_parser("genfunc", help="generating-function numerator over (1-t)...(1-nt)")
    add_common(p_gf)
    p_gf.set_defaults(handler=cmd_genfunc)

    p_ver = sub.add_parser("verify", help="replay every identity against brute force")
    add_common(p_ver, input_required=False)
    p_ver.add_argument("--exhaustive", action="store_true", help="sweep all labeled graphs on --n vertices")
    p_ver.add_argument("--n", type=int, default=None, help=f"vertex count for --exhaustive (at most {MAX_ENUM_N})")
    p_ver.add_argument("--p-max", dest="p_max", type=int, default=8, help="largest Zagreb exponent checked")
    p_ver.add_argument("--m-max", dest="m_max", type=int, default=4, help="largest moment exponent checked")
    p_ver.add_argument("--jobs", type=int, default=1, help="worker processes for batch/exhaustive runs")
    p_ver.set_defaults(handler=cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
