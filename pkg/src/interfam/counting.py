"""Exact counts of intersecting subfamilies.

An intersecting subfamily is a clique of the intersection graph, so the profile
``inter(F, t)`` for ``t = 0..m`` is the clique-size histogram of that graph.  It
is computed as a polynomial in a formal size variable:

    Q(P) = Q(P - v) + x * Q(P & N(v))

with joins split into products (complement components), complete candidate
sets answered by a binomial row, and memoisation on the candidate bitmask.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exactmath import binom
from .family import SetFamily, degree_sequence, disjoint_pairs, elements

COUNT_CAP = 64
BRUTE_FORCE_MAX = 20


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class IntersectionGraph:
    m: int
    adj: tuple[int, ...]  # row i has bit j set iff members i and j intersect

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def edges(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2


@dataclass(frozen=True)
class ProfileSplit:
    trivial: tuple[int, ...]
    nontrivial: tuple[int, ...]

    @property
    def total(self) -> tuple[int, ...]:
        return tuple(a + b for a, b in zip(self.trivial, self.nontrivial))


def intersection_graph(fam: SetFamily) -> IntersectionGraph:
    sets = fam.sets
    m = len(sets)
    adj = [0] * m
    for i in range(m):
        a = sets[i]
        for j in range(i + 1, m):
            if a & sets[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return IntersectionGraph(m, tuple(adj))


# -- clique polynomial -------------------------------------------------------

def _poly_add(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def _poly_mul(p: list[int], q: list[int], limit: int) -> list[int]:
    out = [0] * min(len(p) + len(q) - 1, limit + 1)
    for i, a in enumerate(p):
        if a == 0 or i > limit:
            continue
        for j, b in enumerate(q):
            if i + j > limit:
                break
            out[i + j] += a * b
    return out


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _complement_components(adj, P: int) -> list[int]:
    comps = []
    rest = P
    while rest:
        low = rest & -rest
        comp, frontier = low, low
        rest ^= low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = rest & ~adj[v]
            if new:
                rest &= ~new
                comp |= new
                frontier |= new
        comps.append(comp)
    return comps


class _CliqueCounter:
    def __init__(self, adj):
        self.adj = adj
        self.memo: dict[tuple[int, int], list[int]] = {}

    def count(self, P: int, limit: int) -> list[int]:
        size = P.bit_count()
        if limit == 0 or P == 0:
            return [1]
        if limit == 1:
            return [1, size]
        adj = self.adj
        if limit == 2:
            return [1, size, sum((adj[v] & P).bit_count() for v in _bits(P)) // 2]
        key = (P, limit)
        hit = self.memo.get(key)
        if hit is not None:
            return hit

        degs = {v: (adj[v] & P).bit_count() for v in _bits(P)}
        if all(d == size - 1 for d in degs.values()):
            res = [binom(size, j) for j in range(min(size, limit) + 1)]
        else:
            comps = _complement_components(adj, P)
            if len(comps) > 1:
                res = [1]
                for comp in comps:
                    res = _poly_mul(res, self.count(comp, limit), limit)
            else:
                v = min(degs, key=lambda u: (degs[u], u))
                without = self.count(P & ~(1 << v), limit)
                inside = self.count(P & adj[v], limit - 1)
                res = _poly_add(without, [0] + inside)
        self.memo[key] = res
        return res


def clique_polynomial(adj, mask: int | None = None, max_size: int | None = None) -> list[int]:
    """Number of cliques of each size (index = size) inside ``mask``."""
    if mask is None:
        mask = (1 << len(adj)) - 1
    limit = mask.bit_count() if max_size is None else min(max_size, mask.bit_count())
    res = _CliqueCounter(adj).count(mask, limit)
    return res + [0] * (limit + 1 - len(res))


def inter_profile(fam: SetFamily, cap: int = COUNT_CAP) -> tuple[int, ...]:
    """``(inter(F,0), ..., inter(F,m))`` exactly."""
    if fam.m > cap:
        raise CapExceeded(f"m={fam.m} exceeds counting cap {cap}; use inter_count or raise the cap")
    g = intersection_graph(fam)
    return tuple(clique_polynomial(g.adj))


def inter_count(fam: SetFamily, t: int) -> int:
    """``inter(F, t)`` for one size; cheap for small ``t`` at any ``m``."""
    if t < 0 or t > fam.m:
        return 0
    g = intersection_graph(fam)
    return clique_polynomial(g.adj, max_size=t)[t]


def brute_force_profile(fam: SetFamily, cap: int = COUNT_CAP) -> tuple[int, ...]:
    """Profile by listing every intersecting subfamily one at a time.

    Each subfamily is grown in index order by a set meeting all chosen ones, so
    the work is proportional to the answer rather than 2^m.
    """
    sets = fam.sets
    m = len(sets)
    if m > cap:
        raise CapExceeded(f"m = {m} exceeds the counting cap {cap}")
    meets = [sum(1 << j for j in range(i + 1, m) if sets[i] & sets[j]) for i in range(m)]
    counts = [0] * (m + 1)
    stack = [((1 << m) - 1, 0)]
    while stack:
        cand, size = stack.pop()
        counts[size] += 1
        while cand:
            low = cand & -cand
            cand ^= low
            stack.append((cand & meets[low.bit_length() - 1], size + 1))
    return tuple(counts)


def brute_force_split(fam: SetFamily) -> ProfileSplit:
    sets = fam.sets
    m = len(sets)
    if m > BRUTE_FORCE_MAX:
        raise CapExceeded(f"brute force limited to m <= {BRUTE_FORCE_MAX}, got {m}")
    full = (1 << fam.n) - 1
    triv = [0] * (m + 1)
    nontriv = [0] * (m + 1)
    for sub in range(1 << m):
        chosen = [sets[i] for i in range(m) if sub >> i & 1]
        if not all(a & b for a, b in combinations(chosen, 2)):
            continue
        common = full
        for s in chosen:
            common &= s
        if common or len(chosen) == 0:
            triv[len(chosen)] += 1
        else:
            nontriv[len(chosen)] += 1
    return ProfileSplit(tuple(triv), tuple(nontriv))


# -- stars and the trivial/non-trivial split --------------------------------

def star_count(fam: SetFamily, t: int) -> int:
    """sum_i binom(d_i, t) over all n elements (stars with a designated centre)."""
    if t < 0:
        raise ValueError("t must be non-negative")
    return sum(binom(d, t) for d in degree_sequence(fam))


def _centre_degrees(fam: SetFamily) -> dict[int, int]:
    # members containing each non-empty centre set C, for C inside some member
    deg: dict[int, int] = {}
    for s in fam.sets:
        elts = elements(s)
        for r in range(1, len(elts) + 1):
            for c in combinations(elts, r):
                key = 0
                for x in c:
                    key |= 1 << (x - 1)
                deg[key] = deg.get(key, 0) + 1
    return deg


def trivial_count(fam: SetFamily, t: int, _centres: dict[int, int] | None = None) -> int:
    """t-subfamilies with non-empty common intersection, by inclusion-exclusion over centres."""
    if t == 0:
        return 1
    if t < 0 or t > fam.m:
        return 0
    centres = _centre_degrees(fam) if _centres is None else _centres
    total = 0
    for c, d in centres.items():
        term = binom(d, t)
        total += term if c.bit_count() % 2 else -term
    return total


def profile_split(fam: SetFamily, cap: int = COUNT_CAP) -> ProfileSplit:
    prof = inter_profile(fam, cap)
    centres = _centre_degrees(fam)
    triv = tuple(trivial_count(fam, t, centres) for t in range(fam.m + 1))
    return ProfileSplit(triv, tuple(p - q for p, q in zip(prof, triv)))


def split_at(fam: SetFamily, t: int) -> tuple[int, int]:
    """(trivial, non-trivial) counts at one size, without the full profile."""
    total = inter_count(fam, t)
    triv = trivial_count(fam, t)
    return triv, total - triv


# -- graph case ---------------------------------------------------------------

def _require_graph(fam: SetFamily) -> None:
    if fam.k != 2:
        raise ValueError(f"graph operation needs k = 2, got k = {fam.k}")


def triangle_count(fam: SetFamily) -> int:
    """Vertex triangles of the graph whose edges are the members."""
    _require_graph(fam)
    nbr = [0] * (fam.n + 1)
    for s in fam.sets:
        u, v = elements(s)
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    total = 0
    for s in fam.sets:
        u, v = elements(s)
        total += (nbr[u] & nbr[v]).bit_count()
    return total // 3


def graph_inter3_identity(fam: SetFamily) -> tuple[int, int, bool]:
    """inter(G, 3) against sum_i binom(d_i, 3) + triangles."""
    _require_graph(fam)
    lhs = inter_count(fam, 3)
    rhs = star_count(fam, 3) + triangle_count(fam)
    return lhs, rhs, lhs == rhs


def intersecting_pairs(fam: SetFamily) -> int:
    return binom(fam.m, 2) - disjoint_pairs(fam)


# -- CSV ----------------------------------------------------------------------

def profile_csv(profile) -> str:
    return "t,count\n" + "".join(f"{t},{c}\n" for t, c in enumerate(profile))


def split_csv(split: ProfileSplit) -> str:
    rows = zip(split.trivial, split.nontrivial)
    return "t,trivial,nontrivial\n" + "".join(f"{t},{a},{b}\n" for t, (a, b) in enumerate(rows))
