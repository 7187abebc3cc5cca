"""Probability that a random subfamily F_p is intersecting.

Conditioning on |F_p| = t turns the probability into the profile polynomial

    P(F_p intersecting) = sum_t inter(F, t) p^t (1 - p)^(m - t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from statistics import NormalDist

import numpy as np

from .counting import COUNT_CAP, inter_profile
from .exactmath import PreconditionError, binom, format_ratio
from .family import SetFamily

MC_CHUNK = 4096
Z95 = NormalDist().inv_cdf(0.975)


@dataclass(frozen=True)
class McEstimate:
    samples: int
    hits: int
    estimate: float
    ci_low: float
    ci_high: float
    seed: int

    def as_dict(self) -> dict:
        return {"samples": self.samples, "hits": self.hits, "estimate": self.estimate,
                "ci_low": self.ci_low, "ci_high": self.ci_high, "seed": self.seed}


def _check_p(p) -> None:
    if not 0 <= p <= 1:
        raise PreconditionError(f"p must lie in [0, 1], got {p}")


def prob_from_profile(profile, p):
    """Evaluate the profile polynomial at ``p``.

    A ``Fraction`` (or ``int``) ``p`` gives an exact ``Fraction``; a ``float``
    gives a float accumulated with ``math.fsum``.
    """
    _check_p(p)
    m = len(profile) - 1
    if isinstance(p, float):
        q = 1.0 - p
        return math.fsum(float(c) * p**t * q ** (m - t) for t, c in enumerate(profile) if c)
    p = Fraction(p)
    q = 1 - p
    return sum((c * p**t * q ** (m - t) for t, c in enumerate(profile) if c), Fraction(0))


def prob_intersecting_exact(fam: SetFamily, p, cap: int = COUNT_CAP) -> Fraction:
    _check_p(p)
    return prob_from_profile(inter_profile(fam, cap), Fraction(p))


def prob_intersecting_float(fam: SetFamily, p: float, cap: int = COUNT_CAP) -> float:
    _check_p(p)
    return prob_from_profile(inter_profile(fam, cap), float(p))


def profile_polynomial(profile) -> list[int]:
    """Coefficients of the probability as a polynomial in p (index = power)."""
    m = len(profile) - 1
    coeffs = [0] * (m + 1)
    for t, c in enumerate(profile):
        if not c:
            continue
        # p^t (1-p)^(m-t) = sum_j binom(m-t, j) (-1)^j p^(t+j)
        for j in range(m - t + 1):
            coeffs[t + j] += c * binom(m - t, j) * (-1) ** j
    return coeffs


def wilson_interval(hits: int, samples: int, z: float = Z95) -> tuple[float, float]:
    phat = hits / samples
    denom = 1 + z * z / samples
    centre = (phat + z * z / (2 * samples)) / denom
    half = z * math.sqrt(phat * (1 - phat) / samples + z * z / (4 * samples * samples)) / denom
    return max(0.0, min(centre - half, phat)), min(1.0, max(centre + half, phat))


def _chunk_hits(disjoint: np.ndarray, m: int, p: float, seed: int, chunk: int, size: int) -> int:
    # every chunk index owns its own Philox counter block, so results only
    # depend on (seed, sample index)
    bitgen = np.random.Philox(key=seed, counter=[0, 0, 0, chunk])
    keep = np.random.Generator(bitgen).random((size, m)) < p
    bad = np.zeros(size, dtype=bool)
    for u, v in disjoint:
        bad |= keep[:, u] & keep[:, v]
    return int(size - bad.sum())


def mc_estimate(fam: SetFamily, p: float, samples: int, seed: int, workers: int = 1) -> McEstimate:
    """Seeded Monte Carlo estimate of P(F_p intersecting) with a Wilson 95% interval."""
    if samples < 1:
        raise PreconditionError("samples must be >= 1")
    _check_p(p)
    p = float(p)
    seed = int(seed) & (2**64 - 1)
    sets = fam.sets
    disjoint = np.array([(i, j) for i in range(fam.m) for j in range(i + 1, fam.m)
                         if not sets[i] & sets[j]], dtype=np.intp).reshape(-1, 2)
    chunks = [(c, min(MC_CHUNK, samples - c * MC_CHUNK)) for c in range(-(-samples // MC_CHUNK))]
    if len(disjoint) == 0 or p == 0.0:
        hits = samples
    elif workers > 1:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(workers) as pool:
            hits = sum(pool.map(lambda cs: _chunk_hits(disjoint, fam.m, p, seed, *cs), chunks))
    else:
        hits = sum(_chunk_hits(disjoint, fam.m, p, seed, c, s) for c, s in chunks)
    lo, hi = wilson_interval(hits, samples)
    return McEstimate(samples, hits, hits / samples, lo, hi, seed)


def prob_report(fam: SetFamily, p: Fraction, mc: McEstimate | None = None) -> dict:
    exact = prob_intersecting_exact(fam, p)
    report = {"p": format_ratio(p), "exact": format_ratio(exact), "float": float(exact)}
    if mc is not None:
        report["mc"] = mc.as_dict()
    return report
