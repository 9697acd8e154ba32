#!/usr/bin/env python3
"""Build a knot CSV (name,homfly) from the KnotInfo export shipped in the
`database_knotinfo` package.

HOMFLY strings are expanded into flat sums of c*v^m*z^n terms and kept in
the KnotInfo sign convention; `homfac factor-db` applies the adaptor.

    pip install database_knotinfo
    python3 tools/make_fixture.py --max-crossings 9 --table1 -o data/knots_fixture.csv
    python3 tools/make_fixture.py --max-crossings 12 -o /tmp/knots_12.csv
"""

import argparse
import csv
import os
import sys

import sympy

TABLE1_KNOTS = [
    "9_12", "4_1", "5_2", "11a_175", "3_1", "8_16", "11a_176", "8_17", "11a_220", "7_5",
    "11a_306", "12a_151", "7_7", "12a_165", "10_136", "12a_259", "11n_20", "12a_300",
    "8_14", "12a_471", "8_3", "12a_505", "9_33", "12a_506", "12a_515", "11n_124",
    "12a_517", "10_150", "12a_535", "12n_462", "12n_500",
]


def knotinfo_csv(path):
    if path:
        return path
    try:
        import database_knotinfo
    except ImportError:
        sys.exit("database_knotinfo is not installed; pass --source")
    base = os.path.dirname(database_knotinfo.__file__)
    return os.path.join(base, "csv_data", "knotinfo_data_complete.csv")


def flat_terms(text):
    v, z = sympy.symbols("v z")
    if not text.strip():
        return "1"
    expr = sympy.expand(sympy.sympify(text.replace("^", "**"), locals={"v": v, "z": z}))
    poly = sympy.Poly(expr * v ** 1000, v, z)
    parts = []
    for (m, n), c in sorted(poly.terms(), key=lambda t: (-t[0][1], -t[0][0])):
        m -= 1000
        factors = []
        if m:
            factors.append("v" if m == 1 else f"v^{m}")
        if n:
            factors.append("z" if n == 1 else f"z^{n}")
        c = int(c)
        mag = abs(c)
        body = "*".join(factors)
        if not body:
            term = str(mag)
        elif mag == 1:
            term = body
        else:
            term = f"{mag}*{body}"
        if not parts:
            parts.append(term if c > 0 else "-" + term)
        else:
            parts.append((" + " if c > 0 else " - ") + term)
    return "".join(parts)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--source", help="knotinfo_data_complete.csv (pipe-separated)")
    ap.add_argument("--max-crossings", type=int, default=9)
    ap.add_argument("--table1", action="store_true", help="also include every knot of the factorization table")
    ap.add_argument("--keep-unknot", action="store_true")
    ap.add_argument("-o", "--output", required=True)
    args = ap.parse_args()

    with open(knotinfo_csv(args.source), newline="") as fh:
        rows = list(csv.DictReader(fh, delimiter="|"))
    rows = rows[1:]  # second line holds column descriptions

    wanted = set(TABLE1_KNOTS) if args.table1 else set()
    out = []
    for row in rows:
        name = row["name"]
        crossings = int(row["crossing_number"])
        if name == "0_1" and not args.keep_unknot:
            continue
        if crossings <= args.max_crossings or name in wanted:
            out.append((name, flat_terms(row["homfly_polynomial"])))

    missing = wanted - {name for name, _ in out}
    if missing:
        sys.exit(f"missing from source: {sorted(missing)}")
    with open(args.output, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "homfly"])
        w.writerows(out)
    print(f"wrote {len(out)} knots to {args.output}", file=sys.stderr)


if __name__ == "__main__":
    main()
