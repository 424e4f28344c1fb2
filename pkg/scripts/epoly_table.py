"""Print E-polynomials with their Euler characteristic and structural checks.

    python scripts/epoly_table.py --max-n 6 --max-g 3
"""

import argparse
import time

from slnepoly.epoly import compute, euler_characteristic, expected_degree


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-g", type=int, default=3)
    ap.add_argument("--show", action="store_true", help="print the full polynomial")
    args = ap.parse_args()
    print(f"{'n':>2} {'g':>2} {'deg':>5} {'euler':>14} {'ok':>3} {'terms':>6} {'sec':>6}")
    for n in range(1, args.max_n + 1):
        for g in range(1, args.max_g + 1):
            t0 = time.perf_counter()
            res = compute(n, g)
            dt = time.perf_counter() - t0
            ok = (
                res.degree == expected_degree(n, g)
                and res.monic
                and res.palindromic
                and res.euler == euler_characteristic(n, g)
            )
            print(f"{n:>2} {g:>2} {res.degree:>5} {res.euler:>14} {'y' if ok else 'N':>3} {len(res.poly.items()):>6} {dt:>6.2f}")
            if args.show:
                print("      " + res.poly.to_plain())


if __name__ == "__main__":
    main()
