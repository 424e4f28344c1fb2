"""Measure the count away from the oddity condition.

For each (n, q) the twisted coefficients are rebuilt from brute character
sums on Gamma and put back into the (tau, t) summation.  Coefficients that
agree for several q on the same branch give a polynomial for that branch.
For n = 2 the result is compared with the quasi closed form.

    python scripts/off_branch.py --n 2 --q 3 7 11 --g 2
    python scripts/off_branch.py --n 4 --q 5 13 --g 2
"""

import argparse

from slnepoly.chartypes import enumerate_pure_types
from slnepoly.coefficients import c_t
from slnepoly.epoly import assemble, n2_closed_form, n_poly, oddity_holds
from slnepoly.exactmath import divisors
from slnepoly.gamma import ctaut_from_gamma


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--q", type=int, nargs="+", required=True)
    ap.add_argument("--g", type=int, default=2)
    args = ap.parse_args()
    n, g = args.n, args.g
    tables = {}
    for q in args.q:
        if (q - 1) % n:
            print(f"q={q}: skipped, n does not divide q-1")
            continue
        tab = {(tau, t): ctaut_from_gamma(q, tau, t) for tau in enumerate_pure_types(n) for t in divisors(n)}
        tables[q] = tab
        changed = {k: v for k, v in tab.items() if v != c_t(*k)}
        print(f"q={q} oddity={oddity_holds(n, q)} coefficients differing from the closed formula: {len(changed)}")
        for (tau, t), v in changed.items():
            print(f"    {tau} t={t}: {v} (closed formula {c_t(tau, t)})")
        poly = assemble(n, g, lambda tau, t: tab[(tau, t)])
        line = f"    assembled at q: {poly(q)}   polynomial branch: {n_poly(n, g)(q)}"
        if n == 2:
            line += f"   quasi closed form: {n2_closed_form(q, g)}"
        print(line)
    distinct = {tuple(sorted((str(k[0]), k[1], str(v)) for k, v in tab.items())) for tab in tables.values()}
    if len(distinct) == 1 and tables:
        tab = next(iter(tables.values()))
        poly = assemble(n, g, lambda tau, t: tab[(tau, t)])
        print(f"all q share one coefficient table; branch polynomial for g={g}:")
        print("    " + poly.to_plain())


if __name__ == "__main__":
    main()
