"""Instance checks of the extremal claims about lex/colex segments.

Each harness returns plain row dicts (CSV-ready) plus an overall ``holds``
flag; nothing here proves anything, it only checks instances.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb

import numpy as np

from .counting import inter_count, inter_profile, split_at
from .exactmath import binom
from .family import SetFamily, colex_segment, disjoint_pairs, family_from_masks, kset, lex_segment
from .search import (DEFAULT_BUDGET, Objective, canonical_families, level_table, random_family,
                     shift_local_search)

VERIFY_COLUMNS = ["m", "t", "max", "lex", "colex", "lex_optimal", "colex_optimal"]


def rows_csv(rows: list[dict], columns: list[str]) -> str:
    def cell(v):
        return str(v).lower() if isinstance(v, bool) else str(v)
    return ",".join(columns) + "\n" + "".join(",".join(cell(r[c]) for c in columns) + "\n" for r in rows)


# -- Ahlswede-Katona ---------------------------------------------------------------

def min_disjoint_by_size_bruteforce(n: int, k: int, chunk: int = 1 << 18) -> list[int]:
    """Minimum disjoint pairs for every m, over all 2^N families (vectorised)."""
    sets, _, _ = level_table(n, k)
    N = len(sets)
    pairs = [(i, j) for i in range(N) for j in range(i + 1, N) if not sets[i] & sets[j]]
    best = [None] * (N + 1)
    for lo in range(0, 1 << N, chunk):
        masks = np.arange(lo, min(lo + chunk, 1 << N), dtype=np.int64)
        bits = ((masks[:, None] >> np.arange(N)) & 1).astype(np.int16)
        size = bits.sum(axis=1)
        dis = np.zeros(len(masks), dtype=np.int32)
        for i, j in pairs:
            dis += bits[:, i] & bits[:, j]
        for m in np.unique(size):
            v = int(dis[size == m].min())
            if best[m] is None or v < best[m]:
                best[m] = v
    return best


def min_disjoint_by_size_canonical(n: int, k: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    sets, _, _ = level_table(n, k)
    N = len(sets)
    best = [None] * (N + 1)
    for ranks in canonical_families(n, k, N, budget):
        fam = SetFamily(n, k, tuple(sets[r] for r in ranks))
        v = disjoint_pairs(fam)
        m = len(ranks)
        if best[m] is None or v < best[m]:
            best[m] = v
    return best


def verify_ahlswede_katona(n: int, prune: bool = True) -> tuple[list[dict], bool]:
    """For every m, is the fewest disjoint edge pairs attained by the lex or colex graph,
    with lex below and colex above the stated thresholds?

    Rows use the shared verification columns with t = 2 (intersecting pairs,
    which is binom(m, 2) minus disjoint pairs), plus ``min_disjoint``,
    ``required`` (which segment the thresholds demand) and ``holds``.
    """
    N = comb(n, 2)
    mins = min_disjoint_by_size_canonical(n, 2) if prune else min_disjoint_by_size_bruteforce(n, 2)
    half = Fraction(N, 2)
    rows, ok = [], True
    for m in range(N + 1):
        lex = disjoint_pairs(lex_segment(n, 2, m))
        colex = disjoint_pairs(colex_segment(n, 2, m))
        lo, co = lex == mins[m], colex == mins[m]
        if m < half - Fraction(n, 2):
            required, holds = "lex", lo
        elif m > half + Fraction(n, 2):
            required, holds = "colex", co
        else:
            required, holds = "either", lo or co
        ok &= holds
        pairs = comb(m, 2)
        rows.append({"m": m, "t": 2, "max": pairs - mins[m], "lex": pairs - lex, "colex": pairs - colex,
                     "lex_optimal": lo, "colex_optimal": co, "min_disjoint": mins[m],
                     "required": required, "holds": holds})
    return rows, ok


AK_COLUMNS = VERIFY_COLUMNS + ["min_disjoint", "required", "holds"]


# -- lex optimality for counting ----------------------------------------------------

def lex_claimed(n: int, k: int, m: int, t: int) -> bool:
    """Does a known result assert lex_segment(n, k, m) maximises inter(., t)?"""
    if t <= 1 or m <= binom(n - 1, k - 1):
        return True
    if k != 2:
        return False
    N = comb(n, 2)
    if 2 * t >= n:  # shifting argument for large t
        return True
    if t == 2 and m < Fraction(N, 2) - Fraction(n, 2):  # Ahlswede-Katona
        return True
    # graphs with at most ell full stars, once n >= 2^(2 + 6/(t-1)) * ell
    ell = 1
    while Fraction(n) ** (t - 1) >= (2 ** (2 * (t - 1) + 6)) * ell ** (t - 1):
        if m <= N - comb(n - ell, 2):
            return True
        ell += 1
    return False


def verify_lex_counting(n: int, k: int, t_max: int, budget: int = DEFAULT_BUDGET,
                        progress=None) -> tuple[list[dict], bool]:
    """Exhaustive max of inter(., t) per (m, t) against the lex and colex segments."""
    sets, _, _ = level_table(n, k)
    N = len(sets)
    best: dict[tuple[int, int], int] = {}
    for ranks in canonical_families(n, k, N, budget, progress):
        m = len(ranks)
        prof = inter_profile(SetFamily(n, k, tuple(sets[r] for r in ranks)), cap=max(64, N))
        for t in range(min(t_max, m) + 1):
            if prof[t] > best.get((m, t), -1):
                best[m, t] = prof[t]
    rows, ok = [], True
    for m in range(N + 1):
        lp = inter_profile(lex_segment(n, k, m), cap=max(64, N))
        cp = inter_profile(colex_segment(n, k, m), cap=max(64, N))
        for t in range(min(t_max, m) + 1):
            mx = best[m, t]
            claimed = lex_claimed(n, k, m, t)
            holds = lp[t] == mx or not claimed
            ok &= holds
            rows.append({"m": m, "t": t, "max": mx, "lex": lp[t], "colex": cp[t],
                         "lex_optimal": lp[t] == mx, "colex_optimal": cp[t] == mx,
                         "claimed": claimed, "holds": holds})
    return rows, ok


LEX_COLUMNS = VERIFY_COLUMNS + ["claimed", "holds"]


# -- the k = 3 counterexample ----------------------------------------------------------

def star_plus_colex(n: int, m_prime: int) -> SetFamily:
    """Full star at 1 plus {2} joined with the first m' colex pairs from {3..n}."""
    star = [kset((1, a, b)) for a in range(2, n + 1) for b in range(a + 1, n + 1)]
    link = colex_segment(n - 2, 2, m_prime)
    lifted = [(s << 2) | 0b10 for s in link.sets]
    return family_from_masks(n, 3, star + lifted)


def section4_counterexample(n: int, m_prime: int) -> dict:
    if not 0 <= m_prime <= comb(n - 2, 2):
        raise ValueError(f"m' must lie in 0..{comb(n - 2, 2)}")
    m = comb(n - 1, 2) + m_prime
    lex = lex_segment(n, 3, m)
    rival = star_plus_colex(n, m_prime)
    a, b = inter_count(lex, 3), inter_count(rival, 3)
    return {"n": n, "m_prime": m_prime, "m": m, "lex": a, "rival": b,
            "identical": lex == rival, "rival_wins": b > a}


def section4_threshold(n: int) -> Fraction:
    return Fraction(comb(n - 2, 2), 2) + Fraction(n - 2, 2)


def section4_sweep(ns=range(10, 21), width: int = 3) -> list[dict]:
    """The counterexample for the first ``width`` values of m' above the threshold."""
    rows = []
    for n in ns:
        first = int(section4_threshold(n)) + 1
        for mp in range(first, min(first + width, comb(n - 2, 2) + 1)):
            rows.append(section4_counterexample(n, mp))
    return rows


S4_COLUMNS = ["n", "m_prime", "m", "lex", "rival", "identical", "rival_wins"]


# -- local search probe -------------------------------------------------------------

def local_search_probe(n: int, k: int, ell: int, m_primes, ts, starts: int, seed: int) -> tuple[list[dict], bool]:
    """Hill-climb from random starts; does anything beat the lex segment on inter(., t)?"""
    rng = random.Random(seed)
    base = comb(n, k) - comb(n - ell, k)
    rows, ok = [], True
    for mp in m_primes:
        m = base + mp
        lex = lex_segment(n, k, m)
        for t in ts:
            obj = Objective("inter", t=t)
            target = inter_count(lex, t)
            best = None
            for _ in range(starts):
                res = shift_local_search(random_family(n, k, m, rng), obj)
                if best is None or res.value > best:
                    best = res.value
            exceeded = best > target
            ok &= not exceeded
            rows.append({"m_prime": mp, "m": m, "t": t, "lex": target, "best_found": best,
                         "starts": starts, "exceeded": exceeded})
    return rows, ok


PROBE_COLUMNS = ["m_prime", "m", "t", "lex", "best_found", "starts", "exceeded"]


# -- non-trivial fraction ------------------------------------------------------------

def nontrivial_fraction(n: int, k: int, m: int, t: int) -> Fraction:
    """Share of intersecting t-subfamilies of the lex segment that are not stars."""
    triv, non = split_at(lex_segment(n, k, m), t)
    return Fraction(non, triv + non)
