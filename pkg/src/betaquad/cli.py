"""Command-line front end: list, show, verify, export.

Exit codes: 0 everything passed; 1 at least one verification failure or
non-convergence; 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import catalog, verify


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="betaquad",
        description="Numerically verify the catalog of beta-function integral identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print the roster (id, group, citation)")

    p_show = sub.add_parser("show", help="print one entry's domain and metadata")
    p_show.add_argument("id")

    p_verify = sub.add_parser("verify", help="run the verification harness")
    p_verify.add_argument("--id", action="append", dest="ids", metavar="ID",
                          help="restrict to this entry (repeatable)")
    p_verify.add_argument("--samples", type=int, default=20)
    p_verify.add_argument("--seed", type=int, default=7)
    p_verify.add_argument("--rtol", type=float, default=None,
                          help="override the per-class relative tolerance")
    p_verify.add_argument("--atol", type=float, default=1e-12)
    p_verify.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p_verify.add_argument("--report", metavar="PATH", default=None,
                          help="write the report here instead of stdout")
    p_verify.add_argument("--format", choices=("json", "text"), default="json")

    p_export = sub.add_parser("export", help="write catalog.json")
    p_export.add_argument("--out", required=True, metavar="PATH")
    return parser


def _cmd_list():
    for rec in sorted(catalog.all_entries(), key=lambda r: r.id):
        print(f"{rec.id:<16} {rec.group}  {rec.citation}")
    return 0


def _cmd_show(entry_id):
    rec = catalog.entry(entry_id)
    print(f"id:              {rec.id}")
    print(f"group:           {rec.group}")
    print(f"tolerance class: {rec.tolerance_class} (rtol {rec.rtol:g})")
    if rec.zero_atol is not None:
        print(f"zero atol:       {rec.zero_atol:g}")
    print(f"citation:        {rec.citation}")
    print("parameters:")
    for prm in rec.domain.params:
        carve = f", excluding {list(prm.exclude)}" if prm.exclude else ""
        print(f"  {prm.name:<6} {prm.kind:<8} range ({prm.lo:g}, {prm.hi:g}]{carve}")
    if rec.domain.relations:
        print("relations:")
        for r in rec.domain.relations:
            print(f"  {r.text}")
    print(f"margin:          {rec.domain.margin:g}")
    return 0


def _cmd_verify(args):
    if args.samples < 1:
        raise ValueError("--samples must be >= 1")
    if args.rtol is not None and args.rtol <= 0.0:
        raise ValueError("--rtol must be positive")
    if args.atol <= 0.0:
        raise ValueError("--atol must be positive")
    if args.jobs < 1:
        raise ValueError("--jobs must be >= 1")

    cfg = verify.RunConfig(
        seed=args.seed,
        samples_per_entry=args.samples,
        rtol_override=args.rtol,
        atol=args.atol,
        entry_filter=tuple(args.ids) if args.ids else None,
        parallelism=args.jobs,
    )
    report = verify.verify_all(cfg)
    consistency = verify.cross_check_consistency(cfg) if cfg.entry_filter is None else None

    if args.format == "json":
        payload = verify.report_to_jsonl(report, consistency)
    else:
        payload = verify.report_to_text(report, consistency)

    if args.report is not None:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)

    failed = report.failures > 0 or (consistency is not None and consistency.verdict == "fail")
    return 1 if failed else 0


def run(argv) -> int:
    """Parse argv (no program name) and execute; returns the exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)

    try:
        if args.command == "list":
            return _cmd_list()
        if args.command == "show":
            return _cmd_show(args.id)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "export":
            catalog.write_catalog_json(args.out)
            return 0
    except catalog.UnknownEntryError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
