"""k-uniform set families over [n].

A k-set is an ``int`` bitmask: element ``i`` (1-based) lives at bit ``i - 1``.
Families are immutable and keep their members in lexicographic order, so two
families with the same members compare and hash equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

MAX_N = 64


class FamilyError(ValueError):
    """Invalid family construction or family file."""


def kset(elements: Iterable[int]) -> int:
    mask = 0
    for x in elements:
        mask |= 1 << (x - 1)
    return mask


def elements(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def lex_key(mask: int) -> tuple[int, ...]:
    # ascending element tuples compare exactly like the lex order on equal-size sets
    return elements(mask)


def lex_less(a: int, b: int) -> bool:
    """A precedes B in lex order iff the smallest element of A ^ B lies in A."""
    d = a ^ b
    return bool(d) and bool(a & d & -d)


def colex_less(a: int, b: int) -> bool:
    """A precedes B in colex order iff the largest element of A ^ B lies in B.

    On bitmasks this is plain integer comparison.
    """
    d = a ^ b
    return bool(d) and bool(b >> (d.bit_length() - 1) & 1)


@dataclass(frozen=True)
class SetFamily:
    n: int
    k: int
    sets: tuple[int, ...]
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.sets)})

    @property
    def m(self) -> int:
        return len(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    def __contains__(self, s: int) -> bool:
        return s in self._index

    def index(self, s: int) -> int:
        return self._index[s]

    def as_lists(self) -> list[list[int]]:
        return [list(elements(s)) for s in self.sets]

    def __str__(self) -> str:
        body = ", ".join("".join(map(str, e)) if self.n < 10 else "{" + ",".join(map(str, e)) + "}"
                         for e in map(elements, self.sets))
        return f"F(n={self.n}, k={self.k}, m={self.m}: {body})"


def _check_nk(n: int, k: int) -> None:
    if not 1 <= n <= MAX_N:
        raise FamilyError(f"n must be in 1..{MAX_N}, got {n}")
    if not 1 <= k <= n:
        raise FamilyError(f"k must be in 1..n, got k={k}, n={n}")


def family_from_masks(n: int, k: int, masks: Iterable[int]) -> SetFamily:
    """Build a family from bitmasks, validating cardinality, range and duplicates."""
    _check_nk(n, k)
    full = (1 << n) - 1
    seen = set()
    for s in masks:
        if s & ~full:
            raise FamilyError(f"element out of range in {elements(s)} (n={n})")
        if s.bit_count() != k:
            raise FamilyError(f"set {elements(s)} does not have {k} elements")
        if s in seen:
            raise FamilyError(f"duplicate member {elements(s)}")
        seen.add(s)
    return SetFamily(n, k, tuple(sorted(seen, key=lex_key)))


def make_family(n: int, k: int, sets: Iterable[Sequence[int]]) -> SetFamily:
    """Family from 1-based element lists, e.g. ``make_family(4, 2, [[1, 2], [3, 4]])``."""
    _check_nk(n, k)
    masks = []
    for s in sets:
        s = list(s)
        if len(set(s)) != len(s):
            raise FamilyError(f"repeated element in {s}")
        if len(s) != k:
            raise FamilyError(f"set {s} does not have {k} elements")
        bad = [x for x in s if not 1 <= x <= n]
        if bad:
            raise FamilyError(f"element out of range in {s} (n={n})")
        masks.append(kset(s))
    return family_from_masks(n, k, masks)


def level(n: int, k: int) -> list[int]:
    """All k-subsets of [n] in lex order."""
    return [kset(c) for c in combinations(range(1, n + 1), k)]


def lex_segment(n: int, k: int, m: int) -> SetFamily:
    _check_nk(n, k)
    if not 0 <= m <= comb(n, k):
        raise FamilyError(f"m={m} out of range 0..{comb(n, k)}")
    return SetFamily(n, k, tuple(lex_unrank(r, n, k) for r in range(m)))


def colex_segment(n: int, k: int, m: int) -> SetFamily:
    _check_nk(n, k)
    if not 0 <= m <= comb(n, k):
        raise FamilyError(f"m={m} out of range 0..{comb(n, k)}")
    first = sorted(level(n, k))[:m]  # colex order == integer order of masks
    return SetFamily(n, k, tuple(sorted(first, key=lex_key)))


def lex_rank(a: int, n: int) -> int:
    """Position of ``a`` among all |a|-subsets of [n] in lex order (0-based)."""
    elts = elements(a)
    k = len(elts)
    r, prev = 0, 0
    for i, x in enumerate(elts, start=1):
        for y in range(prev + 1, x):
            r += comb(n - y, k - i)
        prev = x
    return r


def lex_unrank(r: int, n: int, k: int) -> int:
    total = comb(n, k)
    if not 0 <= r < total:
        raise FamilyError(f"rank {r} out of range 0..{total - 1}")
    mask, x = 0, 1
    for i in range(1, k + 1):
        while r >= comb(n - x, k - i):
            r -= comb(n - x, k - i)
            x += 1
        mask |= 1 << (x - 1)
        x += 1
    return mask


def degree_sequence(fam: SetFamily) -> tuple[int, ...]:
    deg = [0] * fam.n
    for s in fam.sets:
        for x in elements(s):
            deg[x - 1] += 1
    return tuple(deg)


def disjoint_pairs(fam: SetFamily) -> int:
    sets = fam.sets
    return sum(1 for i, a in enumerate(sets) for b in sets[i + 1:] if not a & b)


def is_intersecting(fam: SetFamily) -> bool:
    sets = fam.sets
    return all(a & b for i, a in enumerate(sets) for b in sets[i + 1:])


def is_cover(fam: SetFamily, xs: Iterable[int]) -> bool:
    x = kset(xs)
    return all(s & x for s in fam.sets)


def replace_set(fam: SetFamily, out: int, new: int) -> SetFamily:
    """Swap one member for a set not yet in the family (elementary shift)."""
    if out not in fam:
        raise FamilyError(f"{elements(out)} is not a member")
    if new in fam:
        raise FamilyError(f"{elements(new)} is already a member")
    return family_from_masks(fam.n, fam.k, [s for s in fam.sets if s != out] + [new])


def complement_family(fam: SetFamily) -> SetFamily:
    full = (1 << fam.n) - 1
    return family_from_masks(fam.n, fam.n - fam.k, [full ^ s for s in fam.sets])


def relabel(fam: SetFamily, perm: Sequence[int]) -> SetFamily:
    """Apply ``i -> perm[i - 1]`` to every member (perm is 1-based)."""
    return family_from_masks(fam.n, fam.k, [kset(perm[x - 1] for x in elements(s)) for s in fam.sets])


# -- .fam files --------------------------------------------------------------

def format_fam(fam: SetFamily) -> str:
    lines = [f"{fam.n} {fam.k} {fam.m}"]
    lines += [" ".join(map(str, elements(s))) for s in fam.sets]
    return "\n".join(lines) + "\n"


def parse_fam(text: str) -> SetFamily:
    lines = [(i, ln.split()) for i, ln in enumerate(text.splitlines(), start=1)]
    lines = [(i, toks) for i, toks in lines if toks]
    if not lines:
        raise FamilyError("line 1: empty family file")
    lineno, head = lines[0]
    try:
        n, k, m = (int(t) for t in head)
    except ValueError:
        raise FamilyError(f"line {lineno}: header must be 'n k m'") from None
    _check_nk(n, k)
    body = lines[1:]
    if len(body) != m:
        raise FamilyError(f"line {lineno}: header says m={m} but {len(body)} sets follow")
    masks, seen = [], {}
    for lineno, toks in body:
        try:
            xs = [int(t) for t in toks]
        except ValueError:
            raise FamilyError(f"line {lineno}: non-integer entry") from None
        if len(xs) != k:
            raise FamilyError(f"line {lineno}: expected {k} elements, got {len(xs)}")
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise FamilyError(f"line {lineno}: elements must be strictly increasing")
        if xs[0] < 1 or xs[-1] > n:
            raise FamilyError(f"line {lineno}: element out of range 1..{n}")
        s = kset(xs)
        if s in seen:
            raise FamilyError(f"line {lineno}: duplicate of line {seen[s]}")
        seen[s] = lineno
        masks.append(s)
    return family_from_masks(n, k, masks)


def read_fam(path) -> SetFamily:
    with open(path) as fh:
        return parse_fam(fh.read())


def write_fam(fam: SetFamily, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_fam(fam))
