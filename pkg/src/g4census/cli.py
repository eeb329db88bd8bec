"""Command-line driver: ``g4census run | tables | lookup | verify``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import shutil
import sys
import tempfile
import time
from pathlib import Path

from . import census, database, verify
from .tables import all_tables, table_csv, table_text
from .trig import DEFAULT_KMAX
from .zeta import CountError

log = logging.getLogger("g4census")

EXIT_OK, EXIT_IO, EXIT_VERIFY = 0, 1, 2


def _families(choice: str) -> tuple[str, ...]:
    return ("hyp", "trig") if choice == "all" else (choice,)


def _kmax(s: str) -> int:
    k = int(s)
    if not 3 <= k <= 8:
        raise argparse.ArgumentTypeError("kmax must be in 3..8")
    return k


def _threads(s: str) -> int:
    n = int(s)
    if n < 1:
        raise argparse.ArgumentTypeError("threads must be positive")
    return n


def _db_path(p: str) -> Path:
    path = Path(p)
    return path / "curves.jsonl" if path.is_dir() else path


def cmd_run(args) -> int:
    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
        stage = Path(tempfile.mkdtemp(prefix=".staging-", dir=out))
    except OSError as e:
        print(f"error: cannot write to {out}: {e}", file=sys.stderr)
        return EXIT_IO

    t0 = time.perf_counter()
    try:
        records, mult = census.full_census(_families(args.family), args.kmax, args.threads)
    except CountError as e:
        shutil.rmtree(stage, ignore_errors=True)
        print(f"error: inconsistent point counts ({e}); is --kmax too small?", file=sys.stderr)
        return EXIT_VERIFY
    wall = time.perf_counter() - t0
    rows = [database.record_to_row(r) for r in records]
    nh = sum(r.family == "hyp" for r in records)
    nt = len(records) - nh

    files = {"curves.jsonl": database.dumps_jsonl(records),
             "lpolys.csv": database.dumps_lpolys(rows),
             "summary.txt": (f"hyperelliptic: {nh}, trigonal: {nt}, total: {len(records)}, "
                             f"isogeny classes: {mult['classes']}\n"
                             f"kmax: {args.kmax}\nwall time: {wall:.1f} s\n")}
    if args.format == "csv":
        files["curves.csv"] = database.dumps_csv(records)
    try:
        for name, text in files.items():
            (stage / name).write_text(text, encoding="utf-8")
        for name in files:
            os.replace(stage / name, out / name)
    except OSError as e:
        print(f"error: writing results failed: {e}", file=sys.stderr)
        return EXIT_IO
    finally:
        shutil.rmtree(stage, ignore_errors=True)
    print(files["summary.txt"], end="")
    return EXIT_OK


def cmd_tables(args) -> int:
    src = _db_path(args.input)
    try:
        rows = database.load_jsonl(src)
    except (OSError, json.JSONDecodeError) as e:
        print(f"error: cannot read {src}: {e}", file=sys.stderr)
        return EXIT_IO
    tables = all_tables(rows)
    text = "\n".join(table_text(k, t) for k, t in tables.items())
    if args.out:
        out = Path(args.out)
        try:
            out.mkdir(parents=True, exist_ok=True)
            for key, t in tables.items():
                (out / f"table_{'a' + str(key) if key != 'L' else 'L'}.csv").write_text(
                    table_csv(key, t), encoding="utf-8")
            (out / "tables.txt").write_text(text, encoding="utf-8")
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return EXIT_IO
    print(text, end="")
    return EXIT_OK


def _int_list(s: str) -> list[int]:
    return [int(x) for x in s.split(",") if x != ""]


def row_matches(row: dict, args) -> bool:
    if args.family and row["family"] != args.family:
        return False
    if args.quadric and row.get("quadric") != args.quadric:
        return False
    for key in ("N", "a"):
        prefix = getattr(args, key)
        if prefix is not None and list(row[key][:len(prefix)]) != prefix:
            return False
        for k in range(1, 6):
            want = getattr(args, f"{key}{k}")
            if want is not None and row[key][k - 1] != want:
                return False
    return True


def cmd_lookup(args) -> int:
    src = _db_path(args.db)
    try:
        rows = database.load_jsonl(src)
    except (OSError, json.JSONDecodeError) as e:
        print(f"error: cannot read {src}: {e}", file=sys.stderr)
        return EXIT_IO
    hits = [r for r in rows if row_matches(r, args)]
    for r in hits:
        print(json.dumps(r, separators=(", ", ": ")))
    log.info("%d matching rows", len(hits))
    return EXIT_OK


def cmd_verify(args) -> int:
    for w in verify.check_config(args.kmax):
        print(f"WARN {w}")
    stored = None
    if args.db:
        try:
            stored = database.load_jsonl(_db_path(args.db))
        except (OSError, json.JSONDecodeError) as e:
            print(f"FAIL stored_database_readable: {e}")
            return EXIT_VERIFY
    try:
        records, _ = census.full_census(kmax=args.kmax, threads=args.threads)
    except CountError as e:
        print(f"FAIL census_point_counts_consistent: {e}")
        return EXIT_VERIFY
    rows = [database.record_to_row(r) for r in records]
    checks = verify.run_all(rows, stored)
    for c in checks:
        print(json.dumps(c._asdict()) if args.json else c.line())
    failed = [c.name for c in checks if not c.ok]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed"
          + (f"; failing: {', '.join(failed)}" if failed else ""))
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="g4census",
                                 description="Census of genus-4 curves over GF(2).")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--kmax", type=_kmax, default=DEFAULT_KMAX,
                       help="largest k for the GF(2^k) singular-point search (default 6)")
        p.add_argument("--threads", type=_threads, default=os.cpu_count() or 1)

    p = sub.add_parser("run", help="compute the census and write the database")
    p.add_argument("--family", choices=["hyp", "trig", "all"], default="all")
    common(p)
    p.add_argument("--out", default="census_out")
    p.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("tables", help="tabulate a computed database")
    p.add_argument("--in", dest="input", default="census_out")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("lookup", help="filter rows of a computed database")
    p.add_argument("--db", default="census_out")
    p.add_argument("--family", choices=["hyp", "trig"])
    p.add_argument("--quadric", choices=["q1", "q2", "q3"])
    p.add_argument("--N", type=_int_list, help="prefix of N_1,N_2,...")
    p.add_argument("--a", type=_int_list, help="prefix of a_1,a_2,...")
    for k in range(1, 6):
        p.add_argument(f"--N{k}", type=int)
        p.add_argument(f"--a{k}", type=int)
    p.set_defaults(func=cmd_lookup)

    p = sub.add_parser("verify", help="recompute and run every check")
    common(p)
    p.add_argument("--db", default=None, help="also validate this stored curves.jsonl")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
