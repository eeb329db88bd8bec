"""Reading and writing census files (curves.jsonl, curves.csv, lpolys.csv)."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter, defaultdict
from pathlib import Path

from .zeta import CurveRecord

CSV_FIELDS = ["id", "family", "q", "p", "quadric", "cubic", "pretty",
              *(f"N{k}" for k in range(1, 6)), *(f"a{k}" for k in range(1, 6)),
              *(f"c{i}" for i in range(9)), "iso_class", "iso_size"]


def record_to_row(r: CurveRecord) -> dict:
    row = {"id": r.id, "family": r.family, "q": r.model["q"]}
    if r.family == "hyp":
        row["p"] = r.model["p"]
    else:
        row["quadric"] = r.model["quadric"]
        row["cubic"] = r.model["cubic"]
    row.update(pretty=r.model["pretty"], N=list(r.N), a=list(r.a), L=list(r.L),
               iso_class=r.iso_class, iso_size=r.iso_size)
    return row


def dumps_jsonl(records) -> str:
    return "".join(json.dumps(record_to_row(r), separators=(", ", ": ")) + "\n" for r in records)


def dumps_csv(records) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in records:
        row = record_to_row(r)
        flat = {k: row.get(k, "") for k in ("id", "family", "q", "p", "quadric", "cubic", "pretty")}
        flat.update({f"N{k + 1}": v for k, v in enumerate(row["N"])})
        flat.update({f"a{k + 1}": v for k, v in enumerate(row["a"])})
        flat.update({f"c{i}": v for i, v in enumerate(row["L"])})
        flat.update(iso_class=row["iso_class"], iso_size=row["iso_size"])
        w.writerow(flat)
    return buf.getvalue()


def dumps_lpolys(rows) -> str:
    """One line per isogeny class, in class-id order."""
    classes: dict[tuple, Counter] = defaultdict(Counter)
    for r in rows:
        classes[tuple(r["L"])][r["family"]] += 1
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([*(f"c{i}" for i in range(9)), "size", "hyp", "trig"])
    for L in sorted(classes):
        c = classes[L]
        w.writerow([*L, c["hyp"] + c["trig"], c["hyp"], c["trig"]])
    return buf.getvalue()


def load_jsonl(path: str | Path) -> list[dict]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                rows.append(json.loads(line))
    return rows
