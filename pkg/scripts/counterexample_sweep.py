"""Margin of the star-plus-colex rival over the lex segment on inter(., 3).

For each n, scans every m' and reports the first m' where the rival wins
next to the predicted threshold binom(n-2, 2)/2 + (n-2)/2.
"""

import argparse
from math import comb

from interfam.harness import section4_counterexample, section4_threshold


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=10)
    ap.add_argument("--n-max", type=int, default=20)
    args = ap.parse_args()
    print("  n  threshold  first_win  margin_at_first  margin_at_max")
    for n in range(args.n_min, args.n_max + 1):
        rows = [section4_counterexample(n, mp) for mp in range(comb(n - 2, 2) + 1)]
        first = next((r for r in rows if r["rival_wins"]), None)
        last = rows[-1]
        print(f"{n:3d}{float(section4_threshold(n)):11.1f}"
              f"{first['m_prime'] if first else '-':>11}"
              f"{first['rival'] - first['lex'] if first else '-':>17}"
              f"{last['rival'] - last['lex']:>15}")


if __name__ == "__main__":
    main()
