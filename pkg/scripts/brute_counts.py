"""Finite-field counts over Sl_n(F_q) next to the predicted values.

Each line is JSON.  ``predicted`` is the polynomial on the oddity branch,
the quasi closed form for n = 2, and null otherwise.

    python scripts/brute_counts.py 2:3:1-3 2:5:1-3 3:4:1 3:7:1
"""

import argparse
import json
import time

from slnepoly.epoly import n2_closed_form, n_poly, oddity_holds
from slnepoly.ffgroups import BudgetExceeded, brute_point_count


def parse(spec: str):
    n, q, gs = spec.split(":")
    lo, _, hi = gs.partition("-")
    return int(n), int(q), range(int(lo), int(hi or lo) + 1)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("cases", nargs="+", help="n:q:g or n:q:g1-g2")
    args = ap.parse_args()
    for spec in args.cases:
        n, q, gs = parse(spec)
        for g in gs:
            t0 = time.perf_counter()
            try:
                res = brute_point_count(n, q, g)
            except BudgetExceeded as exc:
                print(json.dumps({"n": n, "q": q, "g": g, "skipped": str(exc)}))
                continue
            if n == 2 and q % 2:
                pred = n2_closed_form(q, g)
            elif oddity_holds(n, q):
                pred = int(n_poly(n, g)(q))
            else:
                pred = None
            rec = {
                "n": n,
                "q": q,
                "g": g,
                "count": res.count,
                "quotient": str(res.quotient),
                "predicted": pred,
                "polynomial": int(n_poly(n, g)(q)),
                "seconds": round(time.perf_counter() - t0, 2),
            }
            print(json.dumps(rec))


if __name__ == "__main__":
    main()
