from itertools import combinations
from math import comb

import pytest

from interfam.family import level, lex_segment
from interfam.harness import (AK_COLUMNS, LEX_COLUMNS, lex_claimed, local_search_probe,
                              min_disjoint_by_size_bruteforce, min_disjoint_by_size_canonical, rows_csv,
                              section4_counterexample, section4_sweep, section4_threshold, star_plus_colex,
                              verify_ahlswede_katona, verify_lex_counting)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_disjoint_minima_agree(n):
    assert min_disjoint_by_size_bruteforce(n, 2) == min_disjoint_by_size_canonical(n, 2)


def test_disjoint_minima_examples():
    # four vertices: two disjoint edges are forced only once a perfect matching is present
    assert min_disjoint_by_size_bruteforce(4, 2) == [0, 0, 0, 0, 1, 2, 3]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_ahlswede_katona(n):
    rows, ok = verify_ahlswede_katona(n)
    assert ok and len(rows) == comb(n, 2) + 1
    assert rows == verify_ahlswede_katona(n, prune=False)[0]
    assert rows_csv(rows, AK_COLUMNS).splitlines()[0] == ",".join(AK_COLUMNS)


def _brute_max_inter(n, t_max):
    """Max number of t-cliques in the intersection graph over every edge set of K_n."""
    edges = level(n, 2)
    best = {}
    for mask in range(1 << len(edges)):
        chosen = [e for i, e in enumerate(edges) if mask >> i & 1]
        m = len(chosen)
        for t in range(2, min(t_max, m) + 1):
            c = sum(1 for sub in combinations(chosen, t) if all(a & b for a, b in combinations(sub, 2)))
            best[m, t] = max(best.get((m, t), 0), c)
    return best


def test_lex_counting_n5_matches_brute_force():
    rows, _ = verify_lex_counting(5, 2, 4)
    truth = _brute_max_inter(5, 4)
    for r in rows:
        if r["t"] >= 2:
            assert r["max"] == truth[r["m"], r["t"]]


def test_lex_counting_n6_boundary():
    rows, ok = verify_lex_counting(6, 2, 15)
    table = {(r["m"], r["t"]): r for r in rows}
    # triangles make colex (K5 minus edges) beat lex at t = 3
    for m in (10, 11):
        r = table[m, 3]
        assert not r["lex_optimal"] and r["colex_optimal"] and r["max"] > r["lex"]
    assert (table[10, 3]["lex"], table[10, 3]["max"]) == (28, 30)
    assert (table[11, 3]["lex"], table[11, 3]["max"]) == (34, 36)
    # m = 12 at t = 2: lex and colex tie at the optimum
    r = table[12, 2]
    assert r["lex"] == r["colex"] == r["max"] == 39
    assert all(r["lex_optimal"] for (m, t), r in table.items() if t >= 4)
    assert not ok
    assert rows_csv(rows, LEX_COLUMNS).count("\n") == len(rows) + 1


def test_lex_claimed():
    assert lex_claimed(6, 2, 3, 5)
    assert lex_claimed(6, 2, 3, 2)
    assert lex_claimed(20, 3, 5, 3)
    assert not lex_claimed(20, 3, 200, 3)


def _triple_loop(fam):
    return sum(1 for a, b, c in combinations(fam.sets, 3) if a & b and b & c and a & c)


def test_star_plus_colex_small():
    n = 7
    assert section4_counterexample(n, 0)["identical"]
    one = section4_counterexample(n, 1)
    assert one["identical"] and one["lex"] == one["rival"]
    for mp in range(comb(n - 2, 2) + 1):
        row = section4_counterexample(n, mp)
        rival = star_plus_colex(n, mp)
        assert rival.m == row["m"] == comb(n - 1, 2) + mp
        assert row["rival"] == _triple_loop(rival)
        assert row["lex"] == _triple_loop(lex_segment(n, 3, row["m"]))


def test_section4_bad_mprime():
    with pytest.raises(ValueError):
        section4_counterexample(8, comb(6, 2) + 1)


def test_section4_sweep_small():
    rows = section4_sweep(range(10, 13), width=2)
    assert {r["n"] for r in rows} == {10, 11, 12}
    assert all(r["m_prime"] > section4_threshold(r["n"]) for r in rows)
    assert any(r["rival_wins"] for r in rows)


def test_local_search_probe_small():
    rows, ok = local_search_probe(7, 3, 1, [0, 1], [2, 3], starts=5, seed=1)
    assert ok and len(rows) == 4
    assert all(r["best_found"] <= r["lex"] for r in rows)
