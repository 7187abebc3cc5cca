from itertools import combinations
from math import comb

import pytest
from hypothesis import given, strategies as st

from interfam.family import (FamilyError, colex_less, colex_segment, complement_family, degree_sequence,
                             disjoint_pairs, elements, format_fam, is_cover, is_intersecting, kset, level,
                             lex_less, lex_rank, lex_segment, lex_unrank, make_family, parse_fam, relabel,
                             replace_set)


def S(*xs):
    return kset(xs)


def test_make_family():
    f = make_family(4, 2, [[3, 4], [1, 2]])
    assert f.m == 2
    assert f.as_lists() == [[1, 2], [3, 4]]
    assert f == make_family(4, 2, [[1, 2], [4, 3]])


@pytest.mark.parametrize("sets, msg", [
    ([[1, 2], [2, 1]], "duplicate"),
    ([[1, 5]], "out of range"),
    ([[1, 2, 3]], "does not have"),
    ([[1, 1]], "repeated"),
])
def test_make_family_rejects(sets, msg):
    with pytest.raises(FamilyError, match=msg):
        make_family(4, 2, sets)


def test_lex_less_examples():
    assert lex_less(S(1, 2), S(1, 3))
    assert lex_less(S(1, 4), S(2, 3))
    assert not lex_less(S(2, 3), S(2, 3))


def test_colex_less_examples():
    assert colex_less(S(1, 3), S(2, 3))
    assert colex_less(S(2, 3), S(1, 4))
    assert not colex_less(S(1, 2), S(1, 2))


ksets = st.integers(2, 9).flatmap(
    lambda n: st.integers(1, n).flatmap(
        lambda k: st.lists(st.sets(st.integers(1, n), min_size=k, max_size=k), min_size=3, max_size=3)))


@given(ksets)
def test_orders_are_strict_total(triple):
    a, b, c = (kset(s) for s in triple)
    for less in (lex_less, colex_less):
        assert not less(a, a)
        if a != b:
            assert less(a, b) != less(b, a)
        if less(a, b) and less(b, c):
            assert less(a, c)


def test_segments():
    assert lex_segment(4, 2, 3).as_lists() == [[1, 2], [1, 3], [1, 4]]
    assert colex_segment(4, 2, 3).as_lists() == [[1, 2], [1, 3], [2, 3]]
    assert lex_segment(4, 2, 0).m == 0
    with pytest.raises(FamilyError):
        lex_segment(4, 2, 7)


def test_rank_examples():
    # lex order of binom([4], 2): 12 13 14 23 24 34
    enum = [kset(c) for c in combinations(range(1, 5), 2)]
    assert lex_rank(S(1, 2), 4) == 0
    assert enum.index(S(2, 3)) == 3 == lex_rank(S(2, 3), 4)
    assert enum[5] == S(3, 4) == lex_unrank(5, 4, 2)
    with pytest.raises(FamilyError):
        lex_unrank(6, 4, 2)


@pytest.mark.parametrize("n", range(1, 11))
def test_rank_roundtrip(n):
    for k in range(1, n + 1):
        enum = [kset(c) for c in combinations(range(1, n + 1), k)]
        for r in range(comb(n, k)):
            s = lex_unrank(r, n, k)
            assert s == enum[r]
            assert lex_rank(s, n) == r


@pytest.mark.parametrize("n", range(2, 9))
def test_complement_of_colex_is_lex(n):
    for k in range(1, n):
        for m in range(comb(n, k) + 1):
            comp = complement_family(colex_segment(n, k, m))
            flipped = relabel(comp, [n + 1 - i for i in range(1, n + 1)])
            assert flipped == lex_segment(n, n - k, m)


def test_degree_sequence():
    assert degree_sequence(lex_segment(4, 2, 3)) == (3, 1, 1, 1)
    assert degree_sequence(lex_segment(4, 2, 0)) == (0, 0, 0, 0)
    assert degree_sequence(make_family(4, 2, [[1, 2], [3, 4]])) == (1, 1, 1, 1)


def test_intersecting_and_disjoint():
    star = lex_segment(5, 2, 4)
    assert is_intersecting(star) and disjoint_pairs(star) == 0
    f = make_family(4, 2, [[1, 2], [3, 4]])
    assert not is_intersecting(f) and disjoint_pairs(f) == 1
    tri = colex_segment(4, 2, 3)
    assert is_intersecting(tri) and disjoint_pairs(tri) == 0


@given(st.integers(2, 8), st.integers(1, 4), st.data())
def test_disjoint_plus_intersecting_pairs(n, k, data):
    k = min(k, n)
    sets = data.draw(st.lists(st.sampled_from(level(n, k)), unique=True, max_size=12))
    from interfam.family import family_from_masks
    f = family_from_masks(n, k, sets)
    meeting = sum(1 for a, b in combinations(f.sets, 2) if a & b)
    assert disjoint_pairs(f) + meeting == comb(f.m, 2)
    assert sum(degree_sequence(f)) == k * f.m


@pytest.mark.parametrize("n,k", [(5, 2), (6, 3), (8, 3), (7, 2)])
def test_small_lex_segments_intersect(n, k):
    for m in range(comb(n - 1, k - 1) + 1):
        assert is_intersecting(lex_segment(n, k, m))


def test_cover():
    star = lex_segment(5, 2, 4)
    assert is_cover(star, [1])
    f = make_family(4, 2, [[1, 2], [3, 4]])
    assert not is_cover(f, [1])
    assert is_cover(f, range(1, 5))


def test_replace_set():
    f = make_family(4, 2, [[1, 2], [3, 4]])
    g = replace_set(f, S(3, 4), S(1, 3))
    assert g.as_lists() == [[1, 2], [1, 3]]
    assert f.as_lists() == [[1, 2], [3, 4]]
    with pytest.raises(FamilyError):
        replace_set(f, S(2, 3), S(1, 4))
    with pytest.raises(FamilyError):
        replace_set(f, S(3, 4), S(1, 2))


def test_fam_roundtrip():
    f = lex_segment(6, 3, 11)
    assert parse_fam(format_fam(f)) == f
    assert elements(S(2, 5, 7)) == (2, 5, 7)


@pytest.mark.parametrize("text, line", [
    ("4 2 2\n1 2\n", "line 1"),
    ("4 2 1\n2 1\n", "line 2"),
    ("4 2 2\n1 2\n1 9\n", "line 3"),
    ("4 2 2\n1 2\n1 2\n", "line 3"),
    ("4 2 1\n1 x\n", "line 2"),
    ("4 2 1\n1 2 3\n", "line 2"),
])
def test_fam_parser_errors(text, line):
    with pytest.raises(FamilyError, match=line):
        parse_fam(text)
