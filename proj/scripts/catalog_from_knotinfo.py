#!/usr/bin/env python3
"""Regenerate the bundled knot catalog and invariant reference table.

Reads the KnotInfo table shipped in the `database_knotinfo` package
(pip install database_knotinfo) and writes

  data/catalog/prime_knots_10.txt       name;crossing_number;PD[...]
  tests/data/knotinfo_invariants.txt    name;jones;alexander;determinant

PD tuples are copied verbatim; the crossing sign is inferred from the over
strand labels (arcs are numbered consecutively along the knot). Jones
exponents are written multiplied by 4 to match the engine's convention.
"""

import argparse
import csv
import pathlib
import re

import sympy


def knotinfo_rows(max_crossings):
    import database_knotinfo

    path = pathlib.Path(database_knotinfo.__file__).parent / "csv_data" / "knotinfo_data_complete.csv"
    csv.field_size_limit(10**9)
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh, delimiter="|"))
    for row in rows[1:]:  # second line holds column descriptions
        c = row["crossing_number"]
        if c.isdigit() and 3 <= int(c) <= max_crossings:
            yield row


def signed_pd(pd_text):
    tuples = [list(map(int, t)) for t in re.findall(r"\[(\d+),(\d+),(\d+),(\d+)\]", pd_text)]
    arcs = 2 * len(tuples)
    out = []
    for a, b, c, d in tuples:
        step = (b - d) % arcs
        if step == 1:
            sign = "+"
        elif step == arcs - 1:
            sign = "-"
        else:
            raise ValueError(f"non-consecutive over strand in {pd_text}")
        out.append(f"({a},{b},{c},{d}){sign}")
    return "PD[" + ",".join(out) + "]"


def poly_text(expr_text, var, scale):
    t = sympy.Symbol("t")
    expr = sympy.sympify(expr_text.replace("^", "**"), locals={"t": t})
    terms = sympy.Poly(sympy.expand(expr * t**64), t).terms()
    parts = []
    for (e,), c in sorted(terms):
        e = (e - 64) * scale
        c = int(c)
        if not parts:
            parts.append(f"{c}*{var}^{e}")
        else:
            parts.append(f"{'-' if c < 0 else '+'} {abs(c)}*{var}^{e}")
    return " ".join(parts) if parts else "0"


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--root", default=pathlib.Path(__file__).resolve().parents[1], type=pathlib.Path)
    ap.add_argument("--max-crossings", type=int, default=10)
    args = ap.parse_args()

    rows = list(knotinfo_rows(args.max_crossings))
    catalog = args.root / "data" / "catalog" / f"prime_knots_{args.max_crossings}.txt"
    reference = args.root / "tests" / "data" / "knotinfo_invariants.txt"
    catalog.parent.mkdir(parents=True, exist_ok=True)
    reference.parent.mkdir(parents=True, exist_ok=True)

    with open(catalog, "w") as fh:
        fh.write(f"# Prime knots with 3..{args.max_crossings} crossings, Rolfsen order, from KnotInfo.\n")
        fh.write("# name;crossing_number;PD[(a,b,c,d)s,...] with a the entering under arc,\n")
        fh.write("# arcs counterclockwise, s the crossing sign.\n")
        for row in rows:
            fh.write(f"{row['name']};{row['crossing_number']};{signed_pd(row['pd_notation'])}\n")

    with open(reference, "w") as fh:
        fh.write("# KnotInfo invariants: name;jones (q exponents x4);alexander (t);determinant\n")
        for row in rows:
            jones = poly_text(row["jones_polynomial"], "q", 4)
            alex = poly_text(row["alexander_polynomial"], "t", 1)
            fh.write(f"{row['name']};{jones};{alex};{row['determinant']}\n")
    print(f"wrote {len(rows)} knots")


if __name__ == "__main__":
    main()
