"""Exact binomials, rationals and the binomial-coefficient inequalities used by
the shifting arguments.

Rationals are :class:`fractions.Fraction` (always in lowest terms, positive
denominator).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

TABLE_BOUND = 512


class PreconditionError(ValueError):
    pass


@lru_cache(maxsize=None)
def _binom_cached(a: int, b: int) -> int:
    return math.comb(a, b)


def binom(a: int, b: int) -> int:
    """Exact binomial coefficient, 0 outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    if a <= TABLE_BOUND:
        return _binom_cached(a, b)
    return math.comb(a, b)


def parse_ratio(text: str) -> Fraction:
    """Parse ``"1/3"`` or ``"0.25"`` exactly (decimals become powers-of-ten ratios)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise PreconditionError(f"not a rational number: {text!r}") from None


def format_ratio(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def lemma32_i(b: int, c: int, r: int) -> tuple[int, Fraction, bool]:
    """binom(b, r) <= (b/c)^r binom(c, r) for 0 <= b <= c, c >= 1."""
    if not (0 <= b <= c and c >= 1 and r >= 0):
        raise PreconditionError(f"need 0 <= b <= c, c >= 1, r >= 0 (b={b}, c={c}, r={r})")
    lhs = binom(b, r)
    rhs = Fraction(b, c) ** r * binom(c, r)
    return lhs, rhs, lhs <= rhs


def capped_sum_bound(degrees: Sequence[int], cap: int, r: int) -> tuple[int, Fraction, bool]:
    """sum_i binom(n_i, r) <= (S / M) binom(M, r) when every 0 <= n_i <= M."""
    if r < 1 or cap <= 0 or any(not 0 <= d <= cap for d in degrees):
        raise PreconditionError(f"need r >= 1, M > 0 and 0 <= n_i <= M (M={cap}, r={r})")
    lhs = sum(binom(d, r) for d in degrees)
    rhs = Fraction(sum(degrees), cap) * binom(cap, r)
    return lhs, rhs, lhs <= rhs


def lemma32_iii(a: int, b: int, c: int, r: int) -> tuple[int, Fraction, bool]:
    """Moving ``a`` from the smaller of two binomial arguments to the larger gains
    at least (1 - (b-a)/c) * a*r/(c-r+1) * binom(c, r)."""
    if not (r >= 2 and 0 <= a <= b <= c):
        raise PreconditionError(f"need r >= 2 and 0 <= a <= b <= c (a={a}, b={b}, c={c}, r={r})")
    lhs = binom(b - a, r) + binom(c + a, r) - binom(b, r) - binom(c, r)
    top = binom(c, r)
    if top == 0:
        # r > c: the factor a*r/(c-r+1) is undefined but multiplies a zero binomial
        rhs = Fraction(0)
    else:
        rhs = (1 - Fraction(b - a, c)) * Fraction(a * r, c - r + 1) * top
    return lhs, rhs, lhs >= rhs


def lemma32_check(part: str, **args) -> tuple[int, Fraction, bool]:
    """Dispatch to one part of the binomial inequality family.

    ``part="i"``: b, c, r.  ``part="ii"``: degrees, cap, r.  ``part="iii"``: a, b, c, r.
    """
    if part == "i":
        return lemma32_i(args["b"], args["c"], args["r"])
    if part == "ii":
        return capped_sum_bound(args["degrees"], args["cap"], args["r"])
    if part == "iii":
        return lemma32_iii(args["a"], args["b"], args["c"], args["r"])
    raise PreconditionError(f"unknown part {part!r}")
