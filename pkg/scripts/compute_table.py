#!/usr/bin/env python3
"""Tabulate A_{g,r}, E_{g,r} and P_{g,r} for a range of genera and ranks.

    python3 scripts/compute_table.py --max-genus 2 --max-rank 3 --json table.json
"""
import argparse
import json

from higgs_series.algebra import poly_to_json, poly_to_text
from higgs_series.mozgovoy import HiggsContext, a_poly, e_poly, h_series, poincare_poly


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--max-genus", type=int, default=2)
    ap.add_argument("--max-rank", type=int, default=3)
    ap.add_argument("--json", help="also write the table here")
    args = ap.parse_args()

    rows = []
    for g in range(args.max_genus + 1):
        ctx = HiggsContext(g, args.max_rank)
        h = h_series(ctx)
        for r in range(1, args.max_rank + 1):
            a, e, p = a_poly(ctx, r, h), e_poly(ctx, r, h), poincare_poly(ctx, r, h)
            print(f"g={g} r={r}")
            for name, val in (("A", a), ("E", e), ("P", p)):
                print(f"  {name} = " + poly_to_text(val).replace("\n", "\n      "))
            rows.append({"g": g, "r": r, "A": poly_to_json(a), "E": poly_to_json(e), "P": poly_to_json(p)})
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()
