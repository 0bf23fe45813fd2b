"""Command line interface: ``abideals <verb> --type E --rank 7 ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import abposets as ap
from . import ideals as idl
from .rootsys import RootSystem, RootSystemError, build_root_system, validate_type
from .tables import malcev_row, table_rows, tower_rows
from .verify import SUITES, run_suite

MAX_RANK = 8
WARN_RANK = 6


class UsageError(Exception):
    pass


def _system(args) -> RootSystem:
    t = args.type.strip().upper()
    if len(t) > 1:
        if args.rank is not None and str(args.rank) != t[1:]:
            raise UsageError(f"--type {args.type} conflicts with --rank {args.rank}")
        series, rank = t[0], t[1:]
        if not rank.isdigit():
            raise UsageError(f"cannot parse type {args.type!r}")
        rank = int(rank)
    else:
        if args.rank is None:
            raise UsageError("--rank is required unless --type carries it (e.g. E7)")
        series, rank = t, args.rank
    try:
        validate_type(series, rank)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    if rank > MAX_RANK:
        raise UsageError(f"rank {rank} exceeds the supported maximum {MAX_RANK}")
    return build_root_system(series, rank)


def _root_arg(rs: RootSystem, args):
    if args.alpha is not None and args.root is not None:
        raise UsageError("give either --alpha or --root, not both")
    if args.alpha is not None:
        if not 1 <= args.alpha <= rs.rank:
            raise UsageError(f"--alpha must lie in 1..{rs.rank}")
        return rs.simple_roots[args.alpha - 1], args.alpha
    if args.root is not None:
        try:
            beta = tuple(int(x) for x in args.root.split(","))
        except ValueError as exc:
            raise UsageError(f"cannot parse --root {args.root!r}") from exc
        if len(beta) != rs.rank:
            raise UsageError(f"--root needs {rs.rank} coefficients")
        return beta, ",".join(map(str, beta))
    raise UsageError("one of --alpha or --root is required")


# -- rendering ----------------------------------------------------------------

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple, dict)):
        return json.dumps(v, ensure_ascii=False, separators=(",", ":"))
    return str(v)


def _columns(rows: list[dict]) -> list[str]:
    cols: list[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    return cols


def render(report: dict, fmt: str) -> str:
    rows = report["rows"]
    if fmt == "json":
        return json.dumps(report, ensure_ascii=False, indent=2) + "\n"
    cols = _columns(rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for r in rows:
            w.writerow([_cell(r.get(c)) for c in cols])
        return buf.getvalue()
    table = [cols] + [[_cell(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(cols))]
    lines = ["  ".join(x.ljust(wd) for x, wd in zip(line, widths)).rstrip() for line in table]
    for k, v in report.get("summary", {}).items():
        lines.append(f"# {k}: {_cell(v)}")
    return "\n".join(lines) + "\n"


# -- verbs --------------------------------------------------------------------

def cmd_enumerate(args) -> tuple[dict, int]:
    rs = _system(args)
    if args.all and rs.rank > WARN_RANK:
        print(f"warning: enumerating all ad-nilpotent ideals of {rs.name} "
              f"(rank {rs.rank} > {WARN_RANK}) produces many records", file=sys.stderr)
    ideals = idl.enumerate_ad_nilpotent(rs) if args.all else idl.enumerate_abelian(rs)
    rows = []
    for k, i in enumerate(ideals):
        rows.append({"index": k, **idl.ideal_record(i)})
    summary = {"type": rs.name, "kind": "all" if args.all else "abelian", "count": len(rows)}
    return {"type": rs.name, "rows": rows, "summary": summary}, 0


def cmd_decompose_x(args) -> tuple[dict, int]:
    rs = _system(args)
    rows = []
    for p in ap.enumerate_X(rs):
        rows.append({
            "tau": list(p.tau),
            "label": p.label,
            "chain": p.chain_label(),
            "k": p.k,
            "subsystems": [[j + 1 for j in sorted(J)] for J in p.chain.subsystems],
            "types": p.chain.labels(),
            "highest_roots": [list(t) for t in p.chain.highest_roots],
        })
    return {"type": rs.name, "rows": rows, "summary": {"type": rs.name, "points": len(rows)}}, 0


def cmd_tower(args) -> tuple[dict, int]:
    rs = _system(args)
    alpha, label = _root_arg(rs, args)
    try:
        rows = tower_rows(rs, alpha, label)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    for r, h in zip(rows, range(1, len(rows) + 1)):
        r["hat_basis"] = []
        if h < len(rows):
            S = ap.hat_subsystem(rs, alpha, h)
            r["hat_basis"] = [[list(b.finite), b.level] for b in S.basis]
    ok = all(r["agree"] for r in rows)
    summary = {"type": rs.name, "alpha": label, "k": len(rows), "agree": ok}
    return {"type": rs.name, "rows": rows, "summary": summary}, 0 if ok else 1


def _all_types(max_rank: int):
    for s, lo in (("A", 1), ("B", 3), ("C", 2), ("D", 4)):
        for n in range(lo, max_rank + 1):
            yield build_root_system(s, n)
    for s, n in (("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)):
        if n <= max_rank:
            yield build_root_system(s, n)


def cmd_tables(args) -> tuple[dict, int]:
    if args.all_types:
        if not 1 <= args.max_rank <= MAX_RANK:
            raise UsageError(f"--max-rank must lie in 1..{MAX_RANK}")
        systems = list(_all_types(args.max_rank))
    else:
        systems = [_system(args)]
    rows, bad = [], 0
    for rs in systems:
        for r in table_rows(rs):
            bad += r["expected"] is not None and r["expected"] != r["dim"]
            bad += not r["agree"]
            rows.append(r)
        m = malcev_row(rs)
        bad += m["expected"] is not None and m["expected"] != m["d"]
        rows.append({"type": rs.name, "alpha": None, "h": None, "tau": "d", "dim": m["d"],
                     "closed_form": m["closed_form"], "expected": m["expected"]})
    summary = {"types": [rs.name for rs in systems], "rows": len(rows), "mismatches": bad}
    return {"rows": rows, "summary": summary}, 0 if bad == 0 else 1


def cmd_verify(args) -> tuple[dict, int]:
    rs = _system(args)
    results = run_suite(rs, args.suite)
    rows = [{"suite": s, "check": c.label, "passed": c.passed, "detail": c.detail}
            for s, c in results]
    failed = sum(not c.passed for _, c in results)
    summary = {"type": rs.name, "suite": args.suite, "passed": len(rows) - failed, "failed": failed}
    return {"type": rs.name, "rows": rows, "summary": summary}, 0 if failed == 0 else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="abideals",
                                description="Abelian and ad-nilpotent ideals of Borel subalgebras.")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, system_required=True):
        sp.add_argument("--type", required=system_required,
                        help="series letter A-G, or a full label such as E7")
        sp.add_argument("--rank", type=int)
        sp.add_argument("--format", choices=("json", "csv", "text"), default="text")

    sp = sub.add_parser("enumerate", help="list abelian (default) or all ad-nilpotent ideals")
    common(sp)
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--abelian", action="store_true", help="abelian ideals only (default)")
    g.add_argument("--all", action="store_true", help="all ad-nilpotent ideals")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("decompose-x", help="points of X with their good chains")
    common(sp)
    sp.set_defaults(func=cmd_decompose_x)

    sp = sub.add_parser("tower", help="the tower m_1(alpha) < ... < m(alpha)")
    common(sp)
    sp.add_argument("--alpha", type=int, help="Bourbaki index of a long simple root")
    sp.add_argument("--root", help="coefficients of a long positive root, e.g. 1,2,2,1")
    sp.set_defaults(func=cmd_tower)

    sp = sub.add_parser("tables", help="dimension tables with closed forms and Malcev d")
    common(sp, system_required=False)
    sp.add_argument("--all-types", action="store_true")
    sp.add_argument("--max-rank", type=int, default=MAX_RANK)
    sp.set_defaults(func=cmd_tables)

    sp = sub.add_parser("verify", help="run verification suites")
    common(sp)
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.verb == "tables" and not args.all_types and args.type is None:
            raise UsageError("tables needs --type or --all-types")
        report, code = args.func(args)
    except UsageError as exc:
        print(f"abideals {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
