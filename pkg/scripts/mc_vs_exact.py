"""Exact P(F_p intersecting) against seeded Monte Carlo for lex and colex segments."""

import argparse
from fractions import Fraction

from interfam.exactmath import format_ratio
from interfam.family import colex_segment, lex_segment
from interfam.probability import mc_estimate, prob_intersecting_exact


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", type=int, default=7)
    ap.add_argument("-k", type=int, default=3)
    ap.add_argument("-m", type=int, default=20)
    ap.add_argument("--samples", type=int, default=200_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print("order    p     exact     mc        95% interval")
    for name, seg in (("lex", lex_segment), ("colex", colex_segment)):
        fam = seg(args.n, args.k, args.m)
        for p in (Fraction(1, 10), Fraction(1, 4), Fraction(1, 2)):
            exact = prob_intersecting_exact(fam, p)
            est = mc_estimate(fam, float(p), args.samples, args.seed)
            print(f"{name:6s}{format_ratio(p):>5s}  {float(exact):.6f}  {est.estimate:.6f}  "
                  f"[{est.ci_low:.6f}, {est.ci_high:.6f}]  {'ok' if est.ci_low <= exact <= est.ci_high else 'outside'}")


if __name__ == "__main__":
    main()
