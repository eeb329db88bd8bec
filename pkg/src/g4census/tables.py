"""The paper-style summary tables, computed from census rows (dicts)."""

from __future__ import annotations

import csv
import io

from .zeta import histogram, multiplicity_table

# column ranges of the published tables
A_TABLE_COLUMNS = {1: 9, 2: 8, 3: 9, 4: 11}
TITLES = {
    1: "Curves for a given number of points.",
    2: "Curves for a given number of degree 2 points.",
    3: "Curves for a given number of degree 3 points.",
    4: "Curves for a given number of degree 4 points.",
    "L": "Number of curves for how many curves have the same L polynomial.",
}


def a_table(rows, n: int) -> dict[str, list[int]]:
    """Rows 'hyp', 'trig', 'total' of the a_n histogram (a_1 = N_1)."""
    width = A_TABLE_COLUMNS.get(n)
    out = {}
    for fam in ("hyp", "trig"):
        vals = [r["a"][n - 1] for r in rows if r["family"] == fam]
        out[fam] = histogram(vals, max(width or 0, max(vals, default=-1) + 1))
    w = max(len(out["hyp"]), len(out["trig"]))
    for fam in ("hyp", "trig"):
        out[fam] += [0] * (w - len(out[fam]))
    out["total"] = [h + t for h, t in zip(out["hyp"], out["trig"])]
    return out


def l_table(rows) -> dict[str, list[int]]:
    m = multiplicity_table(rows)
    return {"hyp": m["hyp"], "trig": m["trig"], "total": m["all"]}


def all_tables(rows) -> dict:
    t = {n: a_table(rows, n) for n in (1, 2, 3, 4)}
    t["L"] = l_table(rows)
    return t


def _label(key) -> str:
    return "a_1 (points over GF(2))" if key == 1 else f"a_{key}" if key != "L" else "# curves with given L"


def table_csv(key, table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    width = max(len(v) for v in table.values())
    w.writerow([_label(key), *range(width), "total"])
    for fam in ("hyp", "trig", "total"):
        row = table[fam]
        w.writerow([fam, *row, *[""] * (width - len(row)), sum(row) if key != "L" else ""])
    return buf.getvalue()


def table_text(key, table) -> str:
    width = max(len(v) for v in table.values())
    head = [_label(key), *map(str, range(width))] + (["Total"] if key != "L" else [])
    lines = [head]
    for fam in ("hyp", "trig", "total"):
        row = [str(v) for v in table[fam]] + [""] * (width - len(table[fam]))
        if key != "L":
            row.append(str(sum(table[fam])))
        lines.append([fam, *row])
    widths = [max(len(r[i]) for r in lines) for i in range(len(head))]
    body = "\n".join("  ".join(c.rjust(wd) for c, wd in zip(r, widths)) for r in lines)
    return f"{TITLES[key]}\n{body}\n"
