"""Command-line front end.

Exit status: 0 success, 1 operational error (bad input, cap or budget hit),
2 a checked claim did not hold.  Machine-readable output goes to stdout,
progress to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from fractions import Fraction

from . import harness
from .counting import CapExceeded, COUNT_CAP, inter_profile, profile_csv, profile_split, split_csv
from .exactmath import PreconditionError, format_ratio, parse_ratio
from .family import FamilyError, colex_segment, elements, format_fam, lex_segment, parse_fam, read_fam
from .probability import mc_estimate, prob_report
from .search import (BudgetExceeded, DEFAULT_BUDGET, Objective, classify_structure, exhaustive_search,
                     shift_local_search)

VERBS = ("gen", "count", "split", "prob", "mc", "search", "shift", "verify-ak", "verify-lex",
         "classify", "counterexample")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ratio(text: str) -> Fraction:
    p = parse_ratio(text)
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"probability must lie in [0, 1]: {text}")
    return p


def _objective(text: str) -> Objective:
    try:
        return Objective.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="interfam", description="Intersecting subfamilies of k-uniform set families.")
    ap.add_argument("--threads", type=int, default=1, help="worker hint for parallel sections")
    ap.add_argument("--quiet", action="store_true", help="no progress on stderr")
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="write the lex or colex initial segment as a .fam file")
    p.add_argument("--order", choices=["lex", "colex"], default="lex")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-o", "--out", default="-")

    p = sub.add_parser("count", help="profile inter(F, t) for t = 0..m as CSV")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--csv", default="-")
    p.add_argument("--cap", type=int, default=COUNT_CAP)

    p = sub.add_parser("split", help="trivial / non-trivial profile split as CSV")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--csv", default="-")
    p.add_argument("--cap", type=int, default=COUNT_CAP)

    p = sub.add_parser("prob", help="exact P(F_p intersecting) as JSON")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("-p", type=_ratio, required=True)
    p.add_argument("--mc-samples", type=int, default=0, help="also run Monte Carlo (needs --seed)")
    p.add_argument("--seed", type=int)

    p = sub.add_parser("mc", help="seeded Monte Carlo estimate as JSON")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("-p", type=_ratio, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("search", help="exhaustive search for optimal families (JSON report)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("--objective", type=_objective, required=True, help="inter:T, prob:P or disjoint")
    p.add_argument("--prune", action="store_true", help="one family per isomorphism class")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--timing", action="store_true", help="include wall time in the report")

    p = sub.add_parser("shift", help="hill-climb by single-set replacements from a family")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--objective", type=_objective, required=True)
    p.add_argument("--max-steps", type=int, default=1000)

    p = sub.add_parser("verify-ak", help="fewest disjoint edge pairs: lex or colex, for every m")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--no-prune", action="store_true", help="scan all 2^binom(n,2) graphs")

    p = sub.add_parser("verify-lex", help="exhaustive max of inter(., t) against lex and colex")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, default=2)
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    p = sub.add_parser("classify", help="full / almost-full star structure as JSON")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--epsilon", type=_ratio, default=Fraction(1, 10))

    p = sub.add_parser("counterexample", help="star-plus-colex rival against the lex segment (k = 3)")
    p.add_argument("-n", type=int, nargs="+", required=True)
    p.add_argument("--m-prime", type=int, help="single m'; default sweeps just above the threshold")
    p.add_argument("--width", type=int, default=3)
    return ap


def parse_args(argv) -> argparse.Namespace:
    args = build_parser().parse_args(argv)
    if args.verb == "prob" and args.mc_samples and args.seed is None:
        raise UsageError("interfam prob: --mc-samples needs an explicit --seed")
    for name in ("infile",):
        path = getattr(args, name, None)
        if path is not None and path != "-":
            try:
                open(path).close()
            except OSError as e:
                raise UsageError(f"cannot read {path}: {e.strerror}") from None
    return args


def _emit(text: str, dest: str = "-") -> None:
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w") as fh:
            fh.write(text)


def _load(path: str):
    if path == "-":
        return parse_fam(sys.stdin.read())
    return read_fam(path)


def run(args: argparse.Namespace) -> int:
    log = (lambda msg: None) if args.quiet else (lambda msg: print(msg, file=sys.stderr))
    v = args.verb
    if v == "gen":
        seg = lex_segment if args.order == "lex" else colex_segment
        _emit(format_fam(seg(args.n, args.k, args.m)), args.out)
    elif v == "count":
        _emit(profile_csv(inter_profile(_load(args.infile), args.cap)), args.csv)
    elif v == "split":
        _emit(split_csv(profile_split(_load(args.infile), args.cap)), args.csv)
    elif v == "prob":
        fam = _load(args.infile)
        mc = mc_estimate(fam, float(args.p), args.mc_samples, args.seed, args.threads) if args.mc_samples else None
        _emit(json.dumps(prob_report(fam, args.p, mc), indent=2) + "\n")
    elif v == "mc":
        fam = _load(args.infile)
        est = mc_estimate(fam, float(args.p), args.samples, args.seed, args.threads)
        _emit(json.dumps({"p": format_ratio(args.p), "mc": est.as_dict()}, indent=2) + "\n")
    elif v == "search":
        rep = exhaustive_search(args.n, args.k, args.m, args.objective, args.prune, args.budget)
        log(f"examined {rep.families_examined} families in {rep.wall_time:.2f}s")
        _emit(rep.to_json(args.timing) + "\n")
    elif v == "shift":
        fam = _load(args.infile)
        res = shift_local_search(fam, args.objective, args.max_steps)
        val = format_ratio(res.value) if isinstance(res.value, Fraction) else str(res.value)
        trace = [{"out": list(elements(o)), "in": list(elements(i)),
                  "value": format_ratio(x) if isinstance(x, Fraction) else str(x)} for o, i, x in res.trace]
        _emit(json.dumps({"objective": str(args.objective), "value": val, "steps": len(trace),
                          "trace": trace, "family": format_fam(res.family)}, indent=2) + "\n")
    elif v == "verify-ak":
        rows, ok = harness.verify_ahlswede_katona(args.n, prune=not args.no_prune)
        _emit(harness.rows_csv(rows, harness.AK_COLUMNS))
        return 0 if ok else 2
    elif v == "verify-lex":
        t_max = comb(args.n, args.k) if args.t_max is None else args.t_max
        rows, ok = harness.verify_lex_counting(args.n, args.k, t_max, args.budget, log)
        _emit(harness.rows_csv(rows, harness.LEX_COLUMNS))
        if not ok:
            log("lex segment missed a claimed maximum (rows with holds=false)")
        return 0 if ok else 2
    elif v == "classify":
        sc = classify_structure(_load(args.infile), args.ell, args.epsilon)
        _emit(json.dumps(sc.as_dict(), indent=2) + "\n")
    elif v == "counterexample":
        if args.m_prime is not None:
            rows = [harness.section4_counterexample(n, args.m_prime) for n in args.n]
            _emit(harness.rows_csv(rows, harness.S4_COLUMNS))
        else:
            rows = harness.section4_sweep(args.n, args.width)
            _emit(harness.rows_csv(rows, harness.S4_COLUMNS))
            return 0 if any(r["rival_wins"] for r in rows) else 2
    return 0


def main(argv=None) -> int:
    try:
        args = parse_args(sys.argv[1:] if argv is None else argv)
        return run(args)
    except UsageError as e:
        print(e, file=sys.stderr)
        return 1
    except (FamilyError, PreconditionError, CapExceeded, BudgetExceeded, ValueError, OSError) as e:
        print(f"interfam: error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
