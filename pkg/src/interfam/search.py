"""Exhaustive and local search over k-uniform families of fixed size.

Families inside the search are bitmasks over *ranks*: bit r stands for the
r-th k-set of [n] in lex order.  Canonical representatives under relabelling
of [n] are the lex-minimal sorted rank lists; they are enumerated by orderly
generation (a canonical family minus its last member is again canonical).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Callable, Iterator

import numpy as np

from .counting import clique_polynomial, inter_count
from .exactmath import binom, format_ratio, parse_ratio
from .family import (SetFamily, colex_segment, degree_sequence, disjoint_pairs, elements,
                     family_from_masks, format_fam, kset, level, lex_segment)
from .probability import prob_intersecting_exact

DEFAULT_BUDGET = 5_000_000
MAX_CANON_N = 8


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int):
        super().__init__(f"search needs {needed} evaluations, budget is {budget}")
        self.needed = needed
        self.budget = budget


# -- objectives ---------------------------------------------------------------

@dataclass(frozen=True)
class Objective:
    kind: str  # "inter", "prob" or "disjoint"
    t: int | None = None
    p: Fraction | None = None

    @classmethod
    def parse(cls, text: str) -> "Objective":
        """``inter:T``, ``prob:P`` (P rational or decimal) or ``disjoint``."""
        kind, _, arg = text.partition(":")
        if kind == "inter" and arg:
            return cls("inter", t=int(arg))
        if kind == "prob" and arg:
            p = parse_ratio(arg)
            if not 0 <= p <= 1:
                raise ValueError(f"p must lie in [0, 1], got {arg}")
            return cls("prob", p=p)
        if kind == "disjoint" and not arg:
            return cls("disjoint")
        raise ValueError(f"bad objective {text!r}; expected inter:T, prob:P or disjoint")

    @property
    def maximize(self) -> bool:
        return self.kind != "disjoint"

    def evaluate(self, fam: SetFamily):
        if self.kind == "inter":
            return inter_count(fam, self.t)
        if self.kind == "prob":
            return prob_intersecting_exact(fam, self.p)
        return disjoint_pairs(fam)

    def better(self, a, b) -> bool:
        return a > b if self.maximize else a < b

    def __str__(self) -> str:
        if self.kind == "inter":
            return f"inter:{self.t}"
        if self.kind == "prob":
            return f"prob:{format_ratio(self.p)}"
        return "disjoint"


def _value_str(v) -> str:
    return format_ratio(v) if isinstance(v, Fraction) else str(v)


@dataclass
class SearchReport:
    objective: Objective
    n: int
    k: int
    m: int
    best_value: object
    maximizers: list[SetFamily]
    maximizer_count: int
    lex_value: object
    colex_value: object
    families_examined: int
    pruning: bool
    wall_time: float

    def to_json(self, timing: bool = False) -> str:
        out = {
            "objective": str(self.objective),
            "n": self.n, "k": self.k, "m": self.m,
            "best_value": _value_str(self.best_value),
            "lex_value": _value_str(self.lex_value),
            "colex_value": _value_str(self.colex_value),
            "maximizer_count": self.maximizer_count,
            "maximizers": [format_fam(f) for f in self.maximizers],
            "families_examined": self.families_examined,
            "pruning": self.pruning,
        }
        if timing:
            # off by default so identical runs give byte-identical reports
            out["wall_time"] = round(self.wall_time, 6)
        return json.dumps(out, indent=2)


# -- level tables -------------------------------------------------------------

@lru_cache(maxsize=None)
def level_table(n: int, k: int) -> tuple[tuple[int, ...], dict[int, int], tuple[int, ...]]:
    """(k-sets in lex order, mask -> rank, intersection adjacency over ranks)."""
    sets = tuple(level(n, k))
    rank = {s: r for r, s in enumerate(sets)}
    adj = [0] * len(sets)
    for i, a in enumerate(sets):
        for j in range(i + 1, len(sets)):
            if a & sets[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return sets, rank, tuple(adj)


def to_rankmask(fam: SetFamily) -> int:
    _, rank, _ = level_table(fam.n, fam.k)
    out = 0
    for s in fam.sets:
        out |= 1 << rank[s]
    return out


def from_rankmask(n: int, k: int, mask: int) -> SetFamily:
    sets, _, _ = level_table(n, k)
    # ranks ascending == lex order, so no re-sort needed
    return SetFamily(n, k, tuple(sets[r] for r in _ranks(mask)))


def _ranks(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@lru_cache(maxsize=None)
def perm_table(n: int, k: int) -> np.ndarray:
    """Row per permutation of [n]: image rank of every rank."""
    if n > MAX_CANON_N:
        raise ValueError(f"canonical forms are limited to n <= {MAX_CANON_N}")
    sets, rank, _ = level_table(n, k)
    perms = np.array(list(permutations(range(n))), dtype=np.int64)
    elems = np.array([[x - 1 for x in elements(s)] for s in sets], dtype=np.int64).reshape(len(sets), k)
    image_masks = (np.left_shift(1, perms[:, elems])).sum(axis=2)
    lookup = np.full(1 << n, -1, dtype=np.int64)
    for s, r in rank.items():
        lookup[s] = r
    return lookup[image_masks].astype(np.int16)


def _images(table: np.ndarray, ranks: list[int]) -> np.ndarray:
    imgs = table[:, ranks]
    imgs.sort(axis=1)
    return imgs


def _lex_smaller_rows(imgs: np.ndarray, ranks) -> np.ndarray:
    diff = imgs - np.asarray(ranks, dtype=np.int16)
    nz = diff != 0
    first = nz.argmax(axis=1)
    vals = diff[np.arange(len(diff)), first]
    return nz.any(axis=1) & (vals < 0)


def is_canonical(n: int, k: int, ranks: list[int]) -> bool:
    if not ranks:
        return True
    return not _lex_smaller_rows(_images(perm_table(n, k), ranks), ranks).any()


def canonical_form(fam: SetFamily) -> SetFamily:
    """Lex-minimal relabelling of ``fam`` over all permutations of [n]."""
    ranks = _ranks(to_rankmask(fam))
    if not ranks:
        return fam
    imgs = _images(perm_table(fam.n, fam.k), ranks)
    order = np.lexsort(imgs.T[::-1])
    best = imgs[order[0]]
    sets, _, _ = level_table(fam.n, fam.k)
    return SetFamily(fam.n, fam.k, tuple(sets[int(r)] for r in best))


def canonical_families(n: int, k: int, max_m: int, budget: int = DEFAULT_BUDGET,
                       progress: Callable[[str], None] | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every canonical rank tuple of size 0..max_m, one isomorphism class each."""
    N = binom(n, k)
    table = perm_table(n, k)
    layer: list[tuple[int, ...]] = [()]
    tests = 0
    for m in range(max_m + 1):
        yield from layer
        if m == max_m:
            return
        nxt = []
        for parent in layer:
            start = parent[-1] + 1 if parent else 0
            for x in range(start, N):
                tests += 1
                if tests > budget:
                    raise BudgetExceeded(tests, budget)
                cand = list(parent) + [x]
                if not _lex_smaller_rows(_images(table, cand), cand).any():
                    nxt.append(tuple(cand))
        if progress:
            progress(f"size {m + 1}: {len(nxt)} classes")
        layer = nxt


# -- exhaustive search ----------------------------------------------------------

def exhaustive_search(n: int, k: int, m: int, objective: Objective, prune_isomorphic: bool = False,
                      budget: int = DEFAULT_BUDGET, max_reported: int = 1000) -> SearchReport:
    """Every m-family of k-subsets of [n] (or one per isomorphism class) scored by ``objective``."""
    start = time.perf_counter()
    sets, _, _ = level_table(n, k)
    N = len(sets)
    if not 0 <= m <= N:
        raise ValueError(f"m={m} out of range 0..{N}")
    if prune_isomorphic:
        candidates = (c for c in canonical_families(n, k, m, budget) if len(c) == m)
    else:
        needed = binom(N, m)
        if needed > budget:
            raise BudgetExceeded(needed, budget)
        candidates = combinations(range(N), m)

    best = None
    winners: list[tuple[int, ...]] = []
    count = examined = 0
    for ranks in candidates:
        examined += 1
        fam = SetFamily(n, k, tuple(sets[r] for r in ranks))
        v = objective.evaluate(fam)
        if best is None or objective.better(v, best):
            best, winners, count = v, [ranks], 1
        elif v == best:
            count += 1
            if len(winners) < max_reported:
                winners.append(ranks)
    maximizers = [SetFamily(n, k, tuple(sets[r] for r in w)) for w in sorted(winners)]
    for fam in maximizers:
        if objective.evaluate(fam) != best:
            raise AssertionError(f"maximizer {fam} does not re-evaluate to {best}")
    return SearchReport(objective, n, k, m, best, maximizers, count,
                        objective.evaluate(lex_segment(n, k, m)),
                        objective.evaluate(colex_segment(n, k, m)),
                        examined, prune_isomorphic, time.perf_counter() - start)


# -- local search ----------------------------------------------------------------

def _small_cliques(adj, mask: int, s: int) -> int:
    if s == 0:
        return 1
    if s == 1:
        return mask.bit_count()
    return clique_polynomial(adj, mask, max_size=s)[s] if mask.bit_count() >= s else 0


def _inter_deltas(adj, F: int, t: int, outs: list[int], ins: list[int]):
    # delta of inter(., t) for swapping out -> in, without re-counting F
    gain = {v: _small_cliques(adj, adj[v] & F, t - 1) for v in ins}
    loss = {u: _small_cliques(adj, adj[u] & F, t - 1) for u in outs}
    for u in outs:
        for v in ins:
            d = gain[v] - loss[u]
            if adj[v] >> u & 1:
                d -= _small_cliques(adj, adj[u] & adj[v] & F, t - 2)
            yield u, v, d


@dataclass
class LocalSearchResult:
    family: SetFamily
    value: object
    trace: list[tuple[int, int, object]] = field(default_factory=list)  # (out, in, value after move)


def shift_local_search(fam: SetFamily, objective: Objective, max_steps: int = 1000) -> LocalSearchResult:
    """Best-improvement hill climbing over single-set replacements.

    Only strictly improving moves are taken; ties prefer the lex-smallest
    incoming set, then the lex-smallest outgoing set.
    """
    n, k = fam.n, fam.k
    sets, rank, adj = level_table(n, k)
    N = len(sets)
    F = to_rankmask(fam)
    value = objective.evaluate(fam)
    trace = []
    for _ in range(max_steps):
        outs = _ranks(F)
        ins = [r for r in range(N) if not F >> r & 1]
        best_move, best_val = None, value
        if objective.kind == "inter":
            t = objective.t
            if t < 2:
                break
            moves = ((u, v, value + d) for u, v, d in _inter_deltas(adj, F, t, outs, ins))
        else:
            moves = ((u, v, objective.evaluate(from_rankmask(n, k, F & ~(1 << u) | 1 << v)))
                     for u in outs for v in ins)
        for u, v, val in moves:
            if objective.better(val, best_val) or (
                    best_move is not None and val == best_val and (v, u) < best_move[::-1]):
                best_move, best_val = (u, v), val
        if best_move is None:
            break
        u, v = best_move
        F = F & ~(1 << u) | 1 << v
        value = best_val
        trace.append((sets[u], sets[v], value))
    result = from_rankmask(n, k, F)
    return LocalSearchResult(result, value, trace)


def random_family(n: int, k: int, m: int, rng) -> SetFamily:
    sets, _, _ = level_table(n, k)
    return family_from_masks(n, k, rng.sample(sets, m))


# -- compressions and structure ----------------------------------------------------

def compress_ij(fam: SetFamily, i: int, j: int) -> SetFamily:
    """Replace j by i in each member that has j but not i, unless the image is already present."""
    if not i < j:
        raise ValueError("compression needs i < j")
    bi, bj = 1 << (i - 1), 1 << (j - 1)
    members = set(fam.sets)
    out = []
    for s in fam.sets:
        if s & bj and not s & bi:
            img = s ^ bj ^ bi
            out.append(s if img in members else img)
        else:
            out.append(s)
    return family_from_masks(fam.n, fam.k, out)


@dataclass(frozen=True)
class StructureClass:
    full_star_centres: tuple[int, ...]
    almost_full_centres: tuple[int, ...]
    cover: tuple[int, ...]
    classification: str  # contains_ell_full_stars | ell_plus_1_almost_full | other
    alpha: Fraction
    epsilon: Fraction
    ell: int

    def as_dict(self) -> dict:
        return {"ell": self.ell, "epsilon": format_ratio(self.epsilon),
                "classification": self.classification,
                "full_star_centres": list(self.full_star_centres),
                "almost_full_centres": list(self.almost_full_centres),
                "cover": list(self.cover), "alpha": format_ratio(self.alpha)}


def classify_structure(fam: SetFamily, ell: int, epsilon: Fraction = Fraction(1, 10)) -> StructureClass:
    n, k, m = fam.n, fam.k, fam.m
    full = binom(n - 1, k - 1)
    deg = degree_sequence(fam)
    full_centres = tuple(i + 1 for i, d in enumerate(deg) if d == full)
    almost = tuple(i + 1 for i, d in enumerate(deg) if d >= (1 - epsilon) * full)
    alpha = Fraction(m - (binom(n, k) - binom(n - ell, k)), full)

    cover: tuple[int, ...] = ()
    if len(full_centres) >= ell:
        cls = "contains_ell_full_stars"
    else:
        cls = "other"
        for c in combinations(almost, ell + 1):
            x = kset(c)
            if all(s & x for s in fam.sets):
                cls, cover = "ell_plus_1_almost_full", c
                break
    if not cover:
        for size in range(0, ell + 2):
            found = next((c for c in combinations(range(1, n + 1), size)
                          if all(s & kset(c) for s in fam.sets)), None)
            if found is not None:
                cover = found
                break
    return StructureClass(full_centres, almost, cover, cls, alpha, Fraction(epsilon), ell)


def almost_full_stars(n: int, k: int, ell: int, epsilon: Fraction = Fraction(1, 10)) -> SetFamily:
    """All k-sets meeting [ell+1], with roughly epsilon/2 of each star removed
    (sets whose only element in [ell+1] is the centre), so no star is full."""
    full = binom(n - 1, k - 1)
    drop = max(1, int(epsilon / 2 * full))
    centres = kset(range(1, ell + 2))
    keep = []
    dropped = {c: 0 for c in range(1, ell + 2)}
    for s in level(n, k):
        hit = s & centres
        if not hit:
            continue
        if hit.bit_count() == 1:
            c = hit.bit_length()
            if dropped[c] < drop:
                dropped[c] += 1
                continue
        keep.append(s)
    return family_from_masks(n, k, keep)


# -- maximum cliques (used for non-trivially intersecting families) -------------

def _colour_bound(adj, P: int) -> list[tuple[int, int]]:
    # greedy colouring; returns vertices in order with their colour number
    order = []
    colour = 0
    rest = P
    while rest:
        colour += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~(1 << v) & ~adj[v]
            rest &= ~(1 << v)
            order.append((v, colour))
    return order


def max_clique(adj, P: int, lower: int = 0) -> tuple[int, int]:
    """Largest clique inside P with more than ``lower`` vertices, as (size, mask); (lower, 0) if none."""
    best = [lower, 0]

    def expand(R: int, size: int, P: int):
        for v, c in reversed(_colour_bound(adj, P)):
            if size + c <= best[0]:
                return
            R2 = R | 1 << v
            P2 = P & adj[v]
            if P2:
                expand(R2, size + 1, P2)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, R2
            P &= ~(1 << v)

    expand(0, 0, P)
    return best[0], best[1]


def max_nontrivial_intersecting(n: int, k: int) -> tuple[int, SetFamily]:
    """Largest intersecting family of k-subsets of [n] with empty common intersection.

    Every such family contains some set, relabelled to {1..k}, and a chain of
    witnesses whose running intersection shrinks to nothing; each witness
    chain is completed by a maximum clique of its common neighbourhood.
    """
    sets, rank, adj = level_table(n, k)
    first = rank[kset(range(1, k + 1))]
    best = [0, 0]

    def grow(W: int, inter: int, cand: int):
        if not inter:
            size = W.bit_count()
            got, clique = max_clique(adj, cand, max(best[0] - size, 0))
            if clique:
                best[0], best[1] = got + size, W | clique
            elif size > best[0]:
                best[0], best[1] = size, W
            return
        if W.bit_count() + cand.bit_count() <= best[0]:
            return
        x = inter & -inter
        for r in _ranks(cand):
            if not sets[r] & x:
                grow(W | 1 << r, inter & sets[r], cand & adj[r])

    grow(1 << first, sets[first], adj[first])
    return best[0], from_rankmask(n, k, best[1])
