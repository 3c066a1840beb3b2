#!/usr/bin/env python3
"""Wall-clock time of both pipelines for each (g, R).

    python3 scripts/bench.py --max-genus 2 --max-rank 4
"""
import argparse
import time

from higgs_series.mozgovoy import HiggsContext, h_series
from higgs_series.schiffmann import h_prime_series


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--max-genus", type=int, default=2)
    ap.add_argument("--max-rank", type=int, default=3)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()

    print(f"{'g':>2} {'R':>2} {'H (s)':>9} {'H_prime (s)':>12}")
    for g in range(args.max_genus + 1):
        for R in range(1, args.max_rank + 1):
            t0 = time.perf_counter()
            h_series(HiggsContext(g, R), args.threads)
            t1 = time.perf_counter()
            h_prime_series(HiggsContext(g, R), args.threads)
            t2 = time.perf_counter()
            print(f"{g:>2} {R:>2} {t1 - t0:>9.2f} {t2 - t1:>12.2f}", flush=True)


if __name__ == "__main__":
    main()
