import random
from itertools import combinations
from math import comb

import pytest

from interfam.counting import (CapExceeded, brute_force_profile, brute_force_split, graph_inter3_identity,
                               inter_count, inter_profile, intersection_graph, profile_csv, profile_split,
                               split_at, split_csv, star_count, triangle_count, trivial_count)
from interfam.family import (colex_segment, degree_sequence, disjoint_pairs, family_from_masks,
                             is_intersecting, level, lex_segment, make_family)

TRIANGLE = colex_segment(4, 2, 3)
STAR4 = lex_segment(5, 2, 4)
TWO = make_family(4, 2, [[1, 2], [3, 4]])
P3 = make_family(4, 2, [[1, 2], [2, 3], [3, 4]])
K4 = colex_segment(5, 2, 6)


def test_intersection_graph():
    g = intersection_graph(STAR4)
    assert all(g.degree(i) == 3 for i in range(4))
    assert intersection_graph(TWO).adj == (0, 0)
    g = intersection_graph(P3)
    assert g.adj[0] >> 1 & 1 and g.adj[1] >> 2 & 1 and not g.adj[0] >> 2 & 1


def _powerset_profile(fam):
    counts = [0] * (fam.m + 1)
    for sub in range(1 << fam.m):
        chosen = [fam.sets[i] for i in range(fam.m) if sub >> i & 1]
        if all(a & b for a, b in combinations(chosen, 2)):
            counts[len(chosen)] += 1
    return tuple(counts)


def test_listing_matches_powerset():
    rng = random.Random(3)
    for _ in range(60):
        f = _random_family(rng, rng.randint(3, 7), 2, 12)
        assert brute_force_profile(f) == _powerset_profile(f)


def test_profile_examples():
    assert brute_force_profile(TRIANGLE) == (1, 3, 3, 1)
    assert inter_profile(TRIANGLE) == (1, 3, 3, 1)
    assert inter_profile(STAR4) == (1, 4, 6, 4, 1)
    assert inter_profile(TWO) == brute_force_profile(TWO) == (1, 2, 0)
    assert brute_force_profile(P3) == (1, 3, 2, 0)


def _random_family(rng, n, k, max_m):
    lv = level(n, k)
    return family_from_masks(n, k, rng.sample(lv, rng.randint(0, min(max_m, len(lv)))))


def test_profile_matches_brute_force_random():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 8)
        f = _random_family(rng, n, rng.choice([1, 2, 3, 4]) if n >= 4 else 2, 13)
        prof = inter_profile(f)
        assert prof == brute_force_profile(f)
        assert prof[0] == 1 and len(prof) == f.m + 1
        if f.m:
            assert prof[1] == f.m
        if f.m >= 2:
            assert prof[2] == comb(f.m, 2) - disjoint_pairs(f)
        assert all(c <= comb(f.m, t) for t, c in enumerate(prof))
        assert all(c == comb(f.m, t) for t, c in enumerate(prof)) == is_intersecting(f)


def test_inter_count_matches_profile():
    rng = random.Random(5)
    for _ in range(50):
        f = _random_family(rng, 7, 3, 20)
        prof = inter_profile(f)
        for t in range(f.m + 1):
            assert inter_count(f, t) == prof[t]
    assert inter_count(TRIANGLE, 5) == 0


def test_inter_count_3_against_triple_loop():
    f = lex_segment(9, 3, 40)
    triples = sum(1 for a, b, c in combinations(f.sets, 3) if a & b and b & c and a & c)
    assert inter_count(f, 3) == triples


def test_cap():
    with pytest.raises(CapExceeded):
        inter_profile(lex_segment(12, 3, 65))
    assert len(inter_profile(lex_segment(12, 3, 65), cap=65)) == 66
    with pytest.raises(CapExceeded):
        brute_force_profile(lex_segment(12, 3, 65))
    with pytest.raises(CapExceeded):
        brute_force_split(lex_segment(12, 3, 21))


def test_star_count():
    assert star_count(TRIANGLE, 2) == 3
    f = lex_segment(7, 3, 17)
    assert star_count(f, 1) == 3 * 17
    assert star_count(f, 0) == 7


def test_triangle_count():
    assert triangle_count(TRIANGLE) == 1
    assert triangle_count(STAR4) == 0
    brute = sum(1 for t in combinations(range(1, 6), 3)
                if all(make_family(5, 2, [list(p)]).sets[0] in K4 for p in combinations(t, 2)))
    assert triangle_count(K4) == brute == 4
    with pytest.raises(ValueError):
        triangle_count(lex_segment(5, 3, 2))


def test_inter3_identity_examples():
    assert graph_inter3_identity(TRIANGLE) == (1, 1, True)
    assert graph_inter3_identity(STAR4) == (4, 4, True)
    lhs, rhs, ok = graph_inter3_identity(K4)
    assert lhs == brute_force_profile(K4)[3] == rhs == 8 and ok


def test_split_examples():
    sp = profile_split(TRIANGLE)
    assert sp.trivial == (1, 3, 3, 0) and sp.nontrivial == (0, 0, 0, 1)
    assert not any(profile_split(STAR4).nontrivial)
    full = family_from_masks(5, 3, level(5, 3))
    assert brute_force_split(full).nontrivial[3] > 0
    assert split_at(full, 3)[1] == brute_force_split(full).nontrivial[3]


def test_split_cross_validation():
    rng = random.Random(8)
    for _ in range(150):
        n = rng.randint(3, 8)
        f = _random_family(rng, n, rng.choice([2, 3]), 12)
        sp = profile_split(f)
        assert sp == brute_force_split(f)
        assert sp.total == inter_profile(f)
        assert sp.nontrivial[:3] == (0,) * min(3, f.m + 1)
        if f.k == 2:
            assert not any(sp.nontrivial[4:])


def test_trivial_count_edge_cases():
    assert trivial_count(TWO, 0) == 1
    assert trivial_count(TWO, 3) == 0


def test_graph_closed_forms_all_graphs_on_5_vertices():
    edges = level(5, 2)
    for mask in range(1 << len(edges)):
        g = family_from_masks(5, 2, [e for i, e in enumerate(edges) if mask >> i & 1])
        prof = inter_profile(g)
        degs = degree_sequence(g)
        if g.m >= 2:
            assert prof[2] == sum(comb(d, 2) for d in degs)
        if g.m >= 3:
            assert prof[3] == sum(comb(d, 3) for d in degs) + triangle_count(g)
        for t in range(4, g.m + 1):
            assert prof[t] == sum(comb(d, t) for d in degs)


def test_nontrivial_share_shrinks_with_n():
    from interfam.harness import nontrivial_fraction
    shares = [nontrivial_fraction(n, 3, 2 * comb(n - 1, 2), 3) for n in range(12, 17)]
    assert all(a > b for a, b in zip(shares, shares[1:]))


def test_csv():
    assert profile_csv((1, 2, 0)) == "t,count\n0,1\n1,2\n2,0\n"
    assert split_csv(profile_split(TRIANGLE)).splitlines()[-1] == "3,0,1"
