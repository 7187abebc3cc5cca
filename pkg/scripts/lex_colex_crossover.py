"""Where does the lex graph stop maximising inter(G, t)?

Exhaustive over isomorphism classes of graphs on n vertices.  Prints every
(m, t) where lex misses the maximum, with the colex value beside it.
"""

import argparse
from math import comb

from interfam.harness import lex_claimed, verify_lex_counting


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-n", type=int, nargs="+", default=[5, 6, 7])
    args = ap.parse_args()
    for n in args.n:
        rows, _ = verify_lex_counting(n, 2, comb(n, 2))
        misses = [r for r in rows if not r["lex_optimal"]]
        print(f"n={n}: lex misses the maximum at {len(misses)} of {len(rows)} (m, t) pairs")
        print("   m   t     max     lex   colex  claimed")
        for r in misses:
            print(f"{r['m']:4d}{r['t']:4d}{r['max']:8d}{r['lex']:8d}{r['colex']:8d}  "
                  f"{'yes' if lex_claimed(n, 2, r['m'], r['t']) else 'no'}")
        print()


if __name__ == "__main__":
    main()
