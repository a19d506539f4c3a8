"""Command-line front end.

    toric-bch code --family C3 --q 3 --emit json
    toric-bch mindist --family C8 --q 7
    toric-bch ec optimal --q 9
    toric-bch tables 5 --emit csv
    toric-bch verify --suite all --max-q 7

Exit status: 0 on success, 1 when a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import delpezzo_codes as dp
from .distance import DEFAULT_BUDGET, min_distance_exhaustive
from .elliptic import WeierstrassCurve, curve_stats, nq1, optimal_search, reference_curve
from .finite_field import prime_power
from .verify import Verifier, passed

FORMATS = ("text", "json", "csv")
TABLE2_FIELDS = ("q", "N_q1", "curve", "count", "trace", "j", "j_tag", "supersingular")


class UsageError(Exception):
    pass


# --- rendering ---------------------------------------------------------------


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def to_csv(rows: list[dict], fields) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for r in rows:
        w.writerow([_cell(r.get(f)) for f in fields])
    return buf.getvalue()


def to_text(rows: list[dict], fields) -> str:
    cols = [[f] + [_cell(r.get(f)) or "-" for r in rows] for f in fields]
    widths = [max(len(c) for c in col) for col in cols]
    lines = []
    for i in range(len(rows) + 1):
        lines.append(" | ".join(col[i].rjust(w) for col, w in zip(cols, widths)).rstrip())
        if i == 0:
            lines.append("-+-".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def emit(rows, fmt: str, fields=dp.REPORT_FIELDS, title: str | None = None) -> str:
    """Render report rows (CodeReports or dicts) deterministically."""
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    rows = [r.to_dict() if hasattr(r, "to_dict") else dict(r) for r in rows]
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    if fmt == "csv":
        return to_csv(rows, fields)
    text = to_text(rows, fields)
    return f"{title}\n\n{text}" if title else text


# --- table builders ----------------------------------------------------------


def _j_tag(curve: WeierstrassCurve, j: int) -> str:
    F = curve.spec
    for label in (0, 1, 1728):
        if F.from_int(label) == j:
            return str(label)
    return ""


def table2_rows() -> list[dict]:
    rows = []
    for q, ref in dp.TABLE2.items():
        c = reference_curve(q)
        st = curve_stats(c)
        rows.append({
            "q": q,
            "N_q1": nq1(q),
            "curve": ref["curve"],
            "count": st.count,
            "trace": st.trace,
            "j": st.j,
            "j_tag": _j_tag(c, st.j),
            "supersingular": st.supersingular,
        })
    return rows


def family_reports(families, qs, args) -> list[dp.CodeReport]:
    out = []
    for family in families:
        for q in qs:
            try:
                if not dp.is_admissible(family, q):
                    continue
            except ValueError:
                continue
            out.append(dp.build_report(family, q, slow=args.slow, workers=args.threads))
    return out


TABLE_LAYOUT = {
    "3": ("family", "q", "n", "k", "d_lower", "d_exact", "delta", "delta_formula"),
    "4": ("family", "q", "d_star", "b", "d_minus_dstar_bound", "d_exact", "lcd", "bch_identity"),
    "5": ("q", "n", "k", "d_exact", "d_lower", "LB", "conjecture_consistent"),
    "6": ("q", "n", "k", "d_exact", "d_lower", "LB", "conjecture_consistent"),
}

TITLES = {
    "2": "F_q-optimal elliptic curves",
    "3": "Non-split toric codes: parameters",
    "4": "Non-split toric codes: BCH parameters and LCD",
    "5": "C3 for small q",
    "6": "C4 for small q",
}


def render_table(which: str, args) -> str:
    qs = [q for q in range(2, args.max_q + 1)]
    if which == "2":
        return emit(table2_rows(), args.emit, TABLE2_FIELDS, TITLES["2"])
    if which in ("3", "4"):
        reports = family_reports(dp.FAMILIES, qs, args)
    else:
        family = "C3" if which == "5" else "C4"
        ref = dp.TABLE5 if which == "5" else dp.TABLE6
        reports = family_reports([family], [q for q in sorted(ref) if q <= args.max_q], args)
    if args.emit != "text":
        return emit(reports, args.emit)
    rows = [r.to_dict() for r in reports]
    if which in ("5", "6"):
        ref = dp.TABLE5 if which == "5" else dp.TABLE6
        for r in rows:
            r["LB"] = ref[r["q"]][3]
    return emit(rows, "text", TABLE_LAYOUT[which], TITLES[which])


# --- subcommands -------------------------------------------------------------


def cmd_code(args) -> tuple[int, str]:
    code = dp.build_family(args.family, args.q, force=args.force)
    report = dp.build_report(args.family, args.q, mindist=args.mindist, slow=args.slow,
                             force=args.force, workers=args.threads)
    if args.emit == "json":
        payload = report.to_dict()
        payload["code"] = code.to_dict()
        return 0, json.dumps(payload, indent=2) + "\n"
    return 0, emit([report], args.emit)


def cmd_mindist(args) -> tuple[int, str]:
    if dp.needs_slow(args.family, args.q) and not args.slow:
        raise UsageError(f"{args.family} at q = {args.q} needs --slow")
    code = dp.build_family(args.family, args.q, force=args.force)
    res = min_distance_exhaustive(code, budget=args.budget, chunks=args.threads, workers=args.threads)
    row = {
        "family": args.family,
        "q": args.q,
        "n": code.n,
        "k": code.k,
        "d": res.d,
        "exact": res.exact,
        "evaluated": res.evaluated,
        "witness": " ".join(map(str, res.witness)),
    }
    fields = tuple(row)
    if args.emit == "json":
        row["witness"] = list(res.witness)
    return 0, emit([row], args.emit, fields)


def cmd_ec(args) -> tuple[int, str]:
    if args.action == "table2":
        return 0, emit(table2_rows(), args.emit, TABLE2_FIELDS, TITLES["2"])
    if args.q is None:
        raise UsageError("--q is required")
    if args.action == "count":
        coeffs = [args.a1, args.a2, args.a3, args.a4, args.a6]
        if all(c is None for c in coeffs):
            curve = reference_curve(args.q)
        else:
            curve = WeierstrassCurve.over(args.q, *[c or 0 for c in coeffs])
        st = curve_stats(curve)
        row = {**curve.to_dict(), **st.to_dict()}
        return 0, emit([row], args.emit, tuple(row))
    res = optimal_search(args.q)
    row = {
        "q": args.q,
        "max_count": res.max_count,
        "N_q1": nq1(args.q),
        "maximizers": len(res.maximizers),
        "j_invariants": " ".join(map(str, sorted(res.j_invariants))),
        "curves_checked": res.curves_checked,
    }
    code = 0 if res.max_count == nq1(args.q) and len(res.j_invariants) == 1 else 1
    return code, emit([row], args.emit, tuple(row))


def cmd_tables(args) -> tuple[int, str]:
    which = ["2", "3", "4", "5", "6"] if args.which == "all" else [args.which]
    if args.emit == "text":
        return 0, "\n".join(render_table(w, args) for w in which)
    if args.emit == "json":
        parts = {w: json.loads(render_table(w, args)) for w in which}
        return 0, json.dumps(parts if len(which) > 1 else parts[which[0]], indent=2) + "\n"
    if len(which) > 1:
        raise UsageError("csv output needs a single table")
    return 0, render_table(which[0], args)


def cmd_verify(args) -> tuple[int, str]:
    checks = Verifier(max_q=args.max_q, slow=args.slow, workers=args.threads).run(args.suite)
    ok = passed(checks)
    if args.emit == "json":
        body = json.dumps({"passed": ok, "checks": [c.to_dict() for c in checks]}, indent=2, default=str) + "\n"
    else:
        lines = [f"{c.status:4}  {c.suite:10}  {c.name}: expected {c.expected}, computed {c.computed}" for c in checks]
        counts = {s: sum(c.status == s for c in checks) for s in ("PASS", "FAIL", "SKIP", "FLAG")}
        lines.append(" ".join(f"{k}={v}" for k, v in counts.items()))
        lines.append("OK" if ok else "FAILED")
        body = "\n".join(lines) + "\n"
    return (0 if ok else 1), body


# --- parser ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def _prime_power(s: str) -> int:
    q = int(s)
    try:
        prime_power(q)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return q


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads for exhaustive searches (results do not depend on it)")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--emit", choices=FORMATS, default="text")

    parser = _Parser(prog="toric-bch", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("code", parents=[common], help="build a code and report its parameters")
    p.add_argument("--family", required=True, choices=dp.FAMILIES)
    p.add_argument("--q", required=True, type=_prime_power)
    p.add_argument("--mindist", action="store_true", help="compute the exact minimum distance")
    p.add_argument("--slow", action="store_true")
    p.add_argument("--force", action="store_true", help="allow q outside the admissible range (unverified)")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("mindist", parents=[common], help="exhaustive minimum distance")
    p.add_argument("--family", required=True, choices=dp.FAMILIES)
    p.add_argument("--q", required=True, type=_prime_power)
    p.add_argument("--slow", action="store_true")
    p.add_argument("--force", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("ec", parents=[common], help="elliptic curve point counts and searches")
    p.add_argument("action", choices=("count", "optimal", "table2"))
    p.add_argument("--q", type=_prime_power)
    for name in ("a1", "a2", "a3", "a4", "a6"):
        p.add_argument(f"--{name}", type=int, help="integer encoding of the coefficient")
    p.set_defaults(func=cmd_ec)

    p = sub.add_parser("tables", parents=[common], help="reproduce the parameter tables")
    p.add_argument("which", choices=("2", "3", "4", "5", "6", "all"))
    p.add_argument("--max-q", type=int, default=9)
    p.add_argument("--slow", action="store_true")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="compare computed values with the reference tables")
    p.add_argument("--suite", choices=("tables", "bch", "lcd", "conjecture", "all"), default="all")
    p.add_argument("--max-q", type=int, default=9)
    p.add_argument("--slow", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be >= 1")
        status, text = args.func(args)
    except UsageError as exc:
        print(str(exc), file=stderr)
        return 2
    except ValueError as exc:  # inadmissible q, singular curve, ...
        print(f"toric-bch: error: {exc}", file=stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
