"""Command-line interface.

Subcommands: ``analyze`` (bounds for one graph), ``walks`` (exact walk
tables), ``enumerate`` (census with per-graph bounds at fixed n, m),
``verify`` (reconcile literature predictions against enumeration).

Graphs are given as ``gen:<bits>``, ``comp:G{p1,...,pk}``, or
``bzp:<c>:<b1>,...,<bz>``.  Output is a human table by default, or
``--json`` / ``--csv``; identical invocations produce identical bytes.
Exit codes: 0 success, 1 domain errors, 2 usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import PreconditionError, bound_report
from .extremal import enumerate_threshold_graphs, verify_predictions
from .graph_model import (
    ParseError,
    ThresholdGraph,
    from_bzp,
    from_composition,
    from_generating_sequence,
    parse_composition,
    to_composition,
    to_json_dict,
)
from .spectral import DEFAULT_TOL, ConvergenceError
from .walks import lw_recurrence

__all__ = ["main", "parse_graph_spec", "run"]


def parse_graph_spec(text: str) -> ThresholdGraph:
    """Parse one of the three graph spec forms."""
    if text.startswith("gen:"):
        body = text[4:]
        if not body:
            raise ParseError("empty generating sequence", 4)
        for i, ch in enumerate(body):
            if ch not in "01":
                raise ParseError(f"generating sequence must be 0/1, got {ch!r}", 4 + i)
        return from_generating_sequence(int(ch) for ch in body)
    if text.startswith("comp:"):
        try:
            return from_composition(parse_composition(text[5:]))
        except ParseError as exc:
            raise ParseError(str(exc).rsplit(" (position", 1)[0], 5 + exc.position) from exc
    if text.startswith("bzp:"):
        body = text[4:]
        head, _, tail = body.partition(":")
        if not head.isdigit():
            raise ParseError(f"expected an integer c after 'bzp:', got {head!r}", 4)
        parts: list[int] = []
        pos = 5 + len(head)
        if tail:
            for piece in tail.split(","):
                if not piece.isdigit():
                    raise ParseError(f"expected an integer b entry, got {piece!r}", pos)
                parts.append(int(piece))
                pos += len(piece) + 1
        return from_bzp(int(head), parts)
    raise ParseError("graph spec must start with 'gen:', 'comp:', or 'bzp:'", 0)


# ---------------------------------------------------------------------------
# formatting helpers
# ---------------------------------------------------------------------------


def _csv_float(x) -> str:
    if x is None:
        return ""
    return format(float(x), ".17g")


def _csv_bool(x) -> str:
    if x is None:
        return ""
    return "true" if x else "false"


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _human_float(x) -> str:
    return format(float(x), ".12g")


def _report_dict(report) -> dict:
    return {
        "rho": report.rho,
        "lower_cubic": report.lower_cubic,
        "lower_corollary": report.lower_corollary,
        "lower_quadratic": report.lower_quadratic,
        "upper_cubic": report.upper_cubic,
        "inequality_root": report.inequality_root,
        "sandwich_ok": report.sandwich_ok,
        "gaps": report.gaps,
    }


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_analyze(args) -> str:
    g = parse_graph_spec(args.graph)
    report = bound_report(g, tol=args.tol)
    if args.json:
        return _json_text({"graph": to_json_dict(g)} | _report_dict(report))
    if args.csv:
        header = (
            "generating,n,m,c,z,rho,lower_cubic,lower_corollary,"
            "lower_quadratic,upper_cubic,inequality_root,sandwich_ok"
        )
        row = ",".join(
            [
                g.generating_string,
                str(g.n),
                str(g.m),
                str(g.c),
                str(g.z),
                _csv_float(report.rho),
                _csv_float(report.lower_cubic),
                _csv_float(report.lower_corollary),
                _csv_float(report.lower_quadratic),
                _csv_float(report.upper_cubic),
                _csv_float(report.inequality_root),
                _csv_bool(report.sandwich_ok),
            ]
        )
        return header + "\n" + row + "\n"
    info = to_json_dict(g)
    lines = [
        f"graph        {g.generating_string}  (n={g.n}, m={g.m}, c={g.c}, z={g.z})",
        f"composition  {to_composition(g).format()}",
        f"bzp          {info['bzp']}",
        f"fop          {info['fop']}",
        f"degrees      {info['degrees']}",
        "",
    ]
    ordered = sorted(
        [
            (report.lower_corollary, "lower_corollary"),
            (report.lower_quadratic, "lower_quadratic"),
            (report.lower_cubic, "lower_cubic"),
            (report.inequality_root, "inequality_root"),
            (report.rho, "rho"),
            (report.upper_cubic, "upper_cubic"),
        ],
        key=lambda pair: pair[0],
    )
    lines.append("  <=  ".join(f"{label} {_human_float(value)}" for value, label in ordered))
    lines.append(f"sandwich_ok  {report.sandwich_ok}")
    lines.append("gaps to rho  " + "  ".join(
        f"{key}={_human_float(value)}" for key, value in report.gaps.items()
    ))
    return "\n".join(lines) + "\n"


def _cmd_walks(args) -> str:
    g = parse_graph_spec(args.graph)
    if not g.is_connected:
        raise ValueError("walk tables require a connected graph")
    table = lw_recurrence(g, args.kmax, pmax=args.pmax)
    fp = table.fp[: args.pmax + 1]
    if args.json:
        return _json_text(
            {
                "graph": to_json_dict(g),
                "kmax": args.kmax,
                "pmax": args.pmax,
                "lw": list(table.lw),
                "lw_prime": list(table.lw_prime),
                "lw_double_prime": list(table.lw_double_prime),
                "fp": list(fp),
            }
        )
    if args.csv:
        lines = ["k,LW,LW_prime,LW_double_prime"]
        for k in range(args.kmax + 1):
            lines.append(f"{k},{table.lw[k]},{table.lw_prime[k]},{table.lw_double_prime[k]}")
        lines.append("")
        lines.append("p,F_p")
        for p, value in enumerate(fp):
            lines.append(f"{p},{value}")
        return "\n".join(lines) + "\n"
    width = max(len(str(table.lw_double_prime[-1])), len("LW_double_prime"))
    lines = [
        f"graph {g.generating_string}  (n={g.n}, m={g.m}, c={g.c}, z={g.z})",
        "",
        f"{'k':>4}  {'LW':>{width}}  {'LW_prime':>{width}}  {'LW_double_prime':>{width}}",
    ]
    for k in range(args.kmax + 1):
        lines.append(
            f"{k:>4}  {table.lw[k]:>{width}}  {table.lw_prime[k]:>{width}}  "
            f"{table.lw_double_prime[k]:>{width}}"
        )
    lines.append("")
    lines.append(f"{'p':>4}  F_p")
    for p, value in enumerate(fp):
        lines.append(f"{p:>4}  {value}")
    return "\n".join(lines) + "\n"


def _cmd_enumerate(args) -> str:
    census = enumerate_threshold_graphs(args.n, args.m, connected_only=True)
    if not census:
        raise ValueError(f"no connected threshold graph has n = {args.n}, m = {args.m}")
    reports = [bound_report(g, tol=args.tol, allow_inapplicable=True) for g in census]
    rho_max = max(report.rho for report in reports)
    flags = [rho_max - report.rho <= args.tie_tol for report in reports]
    if args.json:
        rows = []
        for g, report, is_max in zip(census, reports, flags):
            rows.append(
                {
                    "generating": g.generating_string,
                    "composition": to_composition(g).format(),
                    "c": g.c,
                    "z": g.z,
                    "m": g.m,
                    "is_max": is_max,
                }
                | _report_dict(report)
            )
        payload = {
            "n": args.n,
            "m": args.m,
            "census_size": len(census),
            "rho_max": rho_max,
            "maximizers": [
                to_composition(g).format() for g, is_max in zip(census, flags) if is_max
            ],
            "graphs": rows,
        }
        return _json_text(payload)
    if args.csv:
        lines = [
            "generating,c,z,m,rho,lower_cubic,lower_corollary,"
            "lower_quadratic,upper_cubic,inequality_root,is_max"
        ]
        for g, report, is_max in zip(census, reports, flags):
            lines.append(
                ",".join(
                    [
                        g.generating_string,
                        str(g.c),
                        str(g.z),
                        str(g.m),
                        _csv_float(report.rho),
                        _csv_float(report.lower_cubic),
                        _csv_float(report.lower_corollary),
                        _csv_float(report.lower_quadratic),
                        _csv_float(report.upper_cubic),
                        _csv_float(report.inequality_root),
                        _csv_bool(is_max),
                    ]
                )
            )
        return "\n".join(lines) + "\n"
    lines = [f"census n={args.n} m={args.m}: {len(census)} graph(s)", ""]
    for g, report, is_max in zip(census, reports, flags):
        marker = "*" if is_max else " "
        bounds = (
            "bounds n/a"
            if not report.applicable
            else (
                f"lower=[{_human_float(report.lower_corollary)}, "
                f"{_human_float(report.lower_quadratic)}, {_human_float(report.lower_cubic)}, "
                f"{_human_float(report.inequality_root)}]"
                f" upper=[{_human_float(report.upper_cubic)}]"
            )
        )
        lines.append(
            f" {marker} {g.generating_string}  {to_composition(g).format():<18} "
            f"rho={_human_float(report.rho)}  {bounds}"
        )
    lines.append("")
    maximizers = [to_composition(g).format() for g, is_max in zip(census, flags) if is_max]
    lines.append(f"rho_max {_human_float(rho_max)} attained by {', '.join(maximizers)}")
    return "\n".join(lines) + "\n"


def _cmd_verify(args) -> str:
    if args.n_max < args.n_min:
        raise ValueError(f"--n-max must be >= --n-min, got {args.n_max} < {args.n_min}")
    report = verify_predictions(range(args.n_min, args.n_max + 1))
    rows = []
    for row in report.rows:
        rows.append(
            {
                "n": row.n,
                "m": row.m,
                "kind": row.kind,
                "rule": row.rule,
                "predicted": [to_composition(g).format() for g in row.predicted],
                "maximizers": [to_composition(g).format() for g in row.maximizers],
                "ok": row.ok,
                "note": row.note,
            }
        )
    if args.json:
        return _json_text(
            {
                "n_min": args.n_min,
                "n_max": args.n_max,
                "mismatch_count": len(report.mismatches),
                "rows": rows,
            }
        )
    lines = []
    for row in rows:
        status = {True: "ok", False: "MISMATCH", None: "recorded"}[row["ok"]]
        lines.append(
            f"n={row['n']:<3} m={row['m']:<4} {row['kind']:<10} {str(row['rule']):<16} "
            f"{status:<9} predicted={','.join(row['predicted'])} "
            f"maximizers={','.join(row['maximizers'])} ({row['note']})"
        )
    asserted = [row for row in rows if row["kind"] == "asserted"]
    lines.append("")
    lines.append(
        f"checked {len(asserted)} asserted rows, {len(report.mismatches)} mismatch(es); "
        f"{len(rows) - len(asserted)} evidence rows recorded"
    )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# parser and entry points
# ---------------------------------------------------------------------------


def _add_format_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit JSON")
    group.add_argument("--csv", action="store_true", help="emit CSV")
    parser.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threshold-spectra",
        description="Spectral radii, lazy-walk counts, and extremal threshold graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="bound report for one graph")
    p_analyze.add_argument("graph", help="gen:<bits> | comp:G{p1,...} | bzp:<c>:<b1,...>")
    p_analyze.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_format_flags(p_analyze)
    p_analyze.set_defaults(handler=_cmd_analyze)

    p_walks = sub.add_parser("walks", help="exact walk-count tables for one graph")
    p_walks.add_argument("graph", help="gen:<bits> | comp:G{p1,...} | bzp:<c>:<b1,...>")
    p_walks.add_argument("--kmax", type=int, default=50)
    p_walks.add_argument("--pmax", type=int, default=10)
    _add_format_flags(p_walks)
    p_walks.set_defaults(handler=_cmd_walks)

    p_enum = sub.add_parser("enumerate", help="census with bounds at fixed n, m")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--m", type=int, required=True)
    p_enum.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_enum.add_argument("--tie-tol", type=float, default=1e-9, dest="tie_tol")
    _add_format_flags(p_enum)
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_verify = sub.add_parser("verify", help="reconcile predictions with enumeration")
    p_verify.add_argument("--n-max", type=int, required=True, dest="n_max")
    p_verify.add_argument("--n-min", type=int, default=4, dest="n_min")
    _add_format_flags(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        text = args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (PreconditionError, ConvergenceError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
